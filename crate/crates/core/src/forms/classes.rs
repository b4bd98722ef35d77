//! Enumeration of reduced forms and the narrow/wide class tables.

use num_bigint::BigInt;

use super::form::Form;
use super::pell::{fundamental_unit, pell_fundamental, validate_discriminant};
use super::reduce::{cycle_of, reduce, Cycle};
use super::FormsError;

/// All primitive reduced forms of discriminant `D`.
///
/// Reduced forces `A,C ≥ 1`, `A+B+C < 0` (hence `B < 0`), `B² > D`, and
/// `(A−C)² ≥ 0` gives `|B| ≤ (D+1)/2`. The search loops over `B` and
/// factors `(B²−D)/4`; everything is exact.
pub fn enumerate_reduced(d: u64) -> Result<Vec<Form>, FormsError> {
    validate_discriminant(d)?;
    let mut out = Vec::new();
    let b_lo = (d as f64).sqrt() as u64; // refined by the exact B² > D test below
    let b_hi = (d + 1) / 2;
    for babs in b_lo..=b_hi {
        if babs * babs <= d {
            continue;
        }
        let n = babs * babs - d;
        if n % 4 != 0 {
            continue;
        }
        let n4 = n / 4;
        let mut a = 1u64;
        while a * a <= n4 {
            if n4 % a == 0 {
                let c = n4 / a;
                for (aa, cc) in [(a, c), (c, a)] {
                    if aa == cc && a * a == n4 && aa != a {
                        continue; // square divisor handled once
                    }
                    if aa + cc >= babs {
                        continue;
                    }
                    if let Ok(q) = Form::new(
                        BigInt::from(aa),
                        -BigInt::from(babs),
                        BigInt::from(cc),
                    ) {
                        debug_assert!(q.is_reduced());
                        out.push(q);
                    }
                }
            }
            a += 1;
        }
    }
    out.sort_by(|p, q| (p.a(), p.b(), p.c()).cmp(&(q.a(), q.b(), q.c())));
    out.dedup();
    Ok(out)
}

/// Cycles partitioning the reduced forms of discriminant `D`; one cycle per
/// narrow class, ordered by their lexicographically smallest member.
pub fn narrow_classes(d: u64) -> Result<Vec<Cycle>, FormsError> {
    let forms = enumerate_reduced(d)?;
    let mut cycles: Vec<Cycle> = Vec::new();
    for q in &forms {
        if cycles.iter().any(|c| c.contains(q)) {
            continue;
        }
        cycles.push(cycle_of(q)?);
    }
    debug_assert_eq!(cycles.iter().map(|c| c.len()).sum::<usize>(), forms.len());
    Ok(cycles)
}

/// Narrow class structure of a discriminant: the cycles, the pairing of
/// each cycle with the cycle of its negated form, and the unit data
/// `ε_Pell = ε_fund^f`.
#[derive(Debug, Clone)]
pub struct ClassTable {
    pub d: u64,
    pub cycles: Vec<Cycle>,
    /// Unordered pairs `(i, j)` with `i ≤ j`: cycle `j` contains the
    /// reduction of the negated representative of cycle `i`.
    pub wide_pairs: Vec<(usize, usize)>,
    /// `ε_Pell = ε_fund^f`; `f = 2` iff the fundamental unit has norm −1.
    pub f: u8,
    pub eps_norm_sign: i32,
    /// `(v, u)` of the smallest positive Pell solution.
    pub pell: (BigInt, BigInt),
}

impl ClassTable {
    /// Indices of cycles grouped into wide classes (each group has one or
    /// two narrow classes).
    pub fn wide_groups(&self) -> Vec<Vec<usize>> {
        self.wide_pairs
            .iter()
            .map(|&(i, j)| if i == j { vec![i] } else { vec![i, j] })
            .collect()
    }

    /// Number of wide classes.
    pub fn wide_count(&self) -> usize {
        self.wide_pairs.len()
    }
}

/// Full narrow/wide class table for a fundamental discriminant.
///
/// Negating a form reverses orientation, so `cycle(reduce(−Q))` is the
/// conjugate narrow class of `cycle(Q)`; when the fundamental unit has norm
/// −1 (`f = 2`) every cycle pairs with itself.
pub fn wide_class_table(d: u64) -> Result<ClassTable, FormsError> {
    let unit = fundamental_unit(d)?;
    let cycles = narrow_classes(d)?;
    let mut wide_pairs = Vec::new();
    for (i, cyc) in cycles.iter().enumerate() {
        let neg = cyc.forms()[0].negated();
        let red = reduce(&neg)?.reduced;
        let j = cycles
            .iter()
            .position(|c| c.contains(&red))
            .expect("reduction of a negated form lands in some cycle");
        let pair = (i.min(j), i.max(j));
        if !wide_pairs.contains(&pair) {
            wide_pairs.push(pair);
        }
    }
    wide_pairs.sort();
    if unit.norm_sign == -1 {
        debug_assert!(wide_pairs.iter().all(|&(i, j)| i == j));
    }
    Ok(ClassTable {
        d,
        cycles,
        wide_pairs,
        f: unit.f,
        eps_norm_sign: unit.norm_sign,
        pell: pell_fundamental(d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(a: i64, b: i64, c: i64) -> Form {
        Form::new(a, b, c).unwrap()
    }

    #[test]
    fn enumerate_small_discriminants() {
        assert_eq!(enumerate_reduced(5).unwrap(), vec![form(1, -3, 1)]);
        assert_eq!(
            enumerate_reduced(12).unwrap(),
            vec![form(1, -4, 1), form(2, -6, 3), form(3, -6, 2)]
        );
    }

    #[test]
    fn enumerate_d60() {
        let forms = enumerate_reduced(60).unwrap();
        assert_eq!(forms.len(), 12);
        for q in [
            form(1, -8, 1),
            form(2, -10, 5),
            form(3, -12, 7),
            form(7, -16, 7),
            form(6, -18, 11),
            form(15, -30, 14),
        ] {
            assert!(forms.contains(&q), "missing {q}");
        }
    }

    #[test]
    fn enumerate_matches_naive_search() {
        // independent oracle: scan the full box A,|B|,C ≤ D
        for d in [5u64, 8, 12, 13, 17, 21, 24, 28, 33, 40, 60] {
            let fast = enumerate_reduced(d).unwrap();
            let mut slow = Vec::new();
            for a in 1..=(d as i64) {
                for b in -(d as i64)..0 {
                    let num = b * b - d as i64;
                    if num <= 0 || num % (4 * a) != 0 {
                        continue;
                    }
                    let c = num / (4 * a);
                    if let Ok(q) = Form::new(a, b, c) {
                        if q.is_reduced() {
                            slow.push(q);
                        }
                    }
                }
            }
            slow.sort_by(|p, q| (p.a(), p.b(), p.c()).cmp(&(q.a(), q.b(), q.c())));
            assert_eq!(fast, slow, "D={d}");
        }
    }

    #[test]
    fn narrow_class_counts() {
        assert_eq!(narrow_classes(5).unwrap().len(), 1);
        assert_eq!(narrow_classes(12).unwrap().len(), 2);
        let c60 = narrow_classes(60).unwrap();
        assert_eq!(c60.len(), 4);
        let mut lens: Vec<usize> = c60.iter().map(|c| c.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 2, 3, 6]);
    }

    #[test]
    fn wide_tables() {
        let t5 = wide_class_table(5).unwrap();
        assert_eq!((t5.cycles.len(), t5.wide_count(), t5.f), (1, 1, 2));

        let t12 = wide_class_table(12).unwrap();
        assert_eq!((t12.cycles.len(), t12.wide_count(), t12.f), (2, 1, 1));
        // reduce(−[1,−4,1]) lands in the cycle of [2,−6,3]
        let neg = form(1, -4, 1).negated();
        let red = reduce(&neg).unwrap().reduced;
        let j = t12.cycles.iter().position(|c| c.contains(&red)).unwrap();
        assert!(t12.cycles[j].contains(&form(2, -6, 3)));

        let t60 = wide_class_table(60).unwrap();
        assert_eq!((t60.cycles.len(), t60.wide_count(), t60.f), (4, 2, 1));
        assert!(t60.wide_pairs.iter().all(|&(i, j)| i != j));
    }
}
