use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{GrowthTable, Kind};
use crate::error::{Error, Result};

/// Least superadditive majorant on `0..t.len()`:
/// `g(n) = max(t(n), max_{0<k<n} g(k) + g(n−k))`, iterated until stable.
pub fn subnegative_closure(t: &[BigInt]) -> Vec<BigInt> {
    let mut g = t.to_vec();
    loop {
        let mut changed = false;
        for n in 2..g.len() {
            for k in 1..n {
                let s = &g[k] + &g[n - k];
                if s > g[n] {
                    g[n] = s;
                    changed = true;
                }
            }
        }
        if !changed {
            return g;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthModel {
    /// `value ≈ C·n^e`; the slope is `e`.
    Power,
    /// `value ≈ C·2^{λn}`; the slope is `λ`, so the base is `2^λ`.
    Exp,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual in the transformed coordinates.
    pub residual: f64,
}

/// Least squares of `ln v` on `ln n` (power) or of `log₂ v` on `n` (exp).
/// Points with `n = 0` or `v ≤ 0` are skipped for the power model.
pub fn fit_growth(points: &[(f64, f64)], model: GrowthModel) -> Result<Fit> {
    let xy: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(n, v)| v > 0.0 && (model == GrowthModel::Exp || n > 0.0))
        .map(|&(n, v)| match model {
            GrowthModel::Power => (n.ln(), v.ln()),
            GrowthModel::Exp => (n, v.log2()),
        })
        .collect();
    if xy.len() < 4 {
        return Err(Error::InsufficientData(format!("{} usable points, need 4", xy.len())));
    }
    let k = xy.len() as f64;
    let mx = xy.iter().map(|p| p.0).sum::<f64>() / k;
    let my = xy.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = xy.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::InsufficientData("all points share one abscissa".into()));
    }
    let sxy: f64 = xy.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (xy.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum::<f64>() / k).sqrt();
    Ok(Fit { slope, intercept, residual })
}

/// Fits the rows of one kind.
pub fn fit_table(t: &GrowthTable, kind: Kind, model: GrowthModel) -> Result<Fit> {
    let pts: Vec<(f64, f64)> = t
        .rows
        .iter()
        .filter(|r| r.kind == kind)
        .map(|r| (r.n as f64, r.value.to_f64().unwrap_or(f64::INFINITY)))
        .collect();
    fit_growth(&pts, model)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BrickCorsonReport {
    pub checked: usize,
    pub violations: Vec<String>,
    pub skipped: Vec<String>,
}

impl BrickCorsonReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `Area(n) ≤ Ann(n)`, `Ann(n) ≤ Area(2·CL(n) + n)` and
/// `CL(n) ≤ n/2 + M·Ann(n)`, each only where the needed bounds are known.
pub fn brick_corson_check(area: &GrowthTable, cl: &GrowthTable, ann: &GrowthTable, m: usize) -> BrickCorsonReport {
    let mut rep = BrickCorsonReport::default();
    let n_max = [area.max_n(), cl.max_n(), ann.max_n()].into_iter().flatten().min().unwrap_or(0);
    let m = BigInt::from(m);
    for n in 0..=n_max {
        match (area.lower(n), ann.upper(n)) {
            (Some(a), Some(b)) => {
                rep.checked += 1;
                if a > b {
                    rep.violations.push(format!("n={n}: Area {a} > Ann {b}"));
                }
            }
            _ => rep.skipped.push(format!("n={n}: Area ≤ Ann incomparable")),
        }
        match (ann.lower(n), cl.exact(n).or(cl.upper(n))) {
            (Some(b), Some(c)) => {
                let idx = 2 * c.to_usize().unwrap_or(usize::MAX / 4) + n;
                match area.upper(idx) {
                    Some(a) => {
                        rep.checked += 1;
                        if b > a {
                            rep.violations.push(format!("n={n}: Ann {b} > Area({idx}) {a}"));
                        }
                    }
                    None => rep.skipped.push(format!("n={n}: Area({idx}) not tabulated")),
                }
            }
            _ => rep.skipped.push(format!("n={n}: Ann ≤ Area(2CL+n) incomparable")),
        }
        match (cl.lower(n), ann.upper(n)) {
            (Some(c), Some(b)) => {
                rep.checked += 1;
                // compare 2·CL with n + 2M·Ann to stay in integers
                if BigInt::from(2) * c > BigInt::from(n) + BigInt::from(2) * &m * b {
                    rep.violations.push(format!("n={n}: CL {c} > n/2 + {m}·Ann {b}"));
                }
            }
            _ => rep.skipped.push(format!("n={n}: CL bound incomparable")),
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::super::Function;
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Maximum over all ordered partitions of `n` of the summed values.
    fn partition_oracle(t: &[BigInt], n: usize) -> BigInt {
        if n == 0 {
            return t[0].clone();
        }
        let mut best = t[n].clone();
        for first in 1..n {
            let s = &t[first] + partition_oracle(t, n - first);
            if s > best {
                best = s;
            }
        }
        best
    }

    #[test]
    fn closure_examples() {
        assert_eq!(subnegative_closure(&big(&[0, 5, 6])), big(&[0, 5, 10]));
        let sq: Vec<BigInt> = (0..10).map(|n| BigInt::from(n * n)).collect();
        assert_eq!(subnegative_closure(&sq), sq);
        assert_eq!(subnegative_closure(&big(&[0, 0, 0, 0])), big(&[0, 0, 0, 0]));
    }

    #[test]
    fn closure_matches_partitions() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let len = rng.gen_range(1..=12);
            let t: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(0..50))).collect();
            let g = subnegative_closure(&t);
            for n in 0..len {
                assert_eq!(g[n], partition_oracle(&t, n));
            }
        }
    }

    #[test]
    fn fits() {
        let cubes: Vec<(f64, f64)> = (1..=10).map(|n| (n as f64, (n * n * n) as f64)).collect();
        let f = fit_growth(&cubes, GrowthModel::Power).unwrap();
        assert!((f.slope - 3.0).abs() < 1e-9);
        let flat: Vec<(f64, f64)> = (1..=6).map(|n| (n as f64, 7.0)).collect();
        assert!(fit_growth(&flat, GrowthModel::Power).unwrap().slope.abs() < 1e-12);
        let exp: Vec<(f64, f64)> = (1..=12).map(|n| (n as f64, (3u64 << n) as f64)).collect();
        let f = fit_growth(&exp, GrowthModel::Exp).unwrap();
        assert!((f.slope - 1.0).abs() < 1e-9, "{}", f.slope);
        assert!(matches!(fit_growth(&cubes[..3], GrowthModel::Power), Err(Error::InsufficientData(_))));
    }

    #[test]
    fn brick_corson_negative() {
        let mk = |f, vals: &[i64]| {
            let mut t = GrowthTable::new("X", f);
            for (n, v) in vals.iter().enumerate() {
                t.push(n, *v, Kind::Exact);
            }
            t
        };
        let zero = mk(Function::Area, &[0]);
        assert!(brick_corson_check(&zero, &mk(Function::Cl, &[0]), &mk(Function::Ann, &[0]), 4).passed());
        let area = mk(Function::Area, &[0, 0, 0, 0, 1]);
        let cl = mk(Function::Cl, &[0, 0, 0, 0, 1]);
        let ann = mk(Function::Ann, &[0, 0, 0, 0, 1]);
        assert!(brick_corson_check(&area, &cl, &ann, 5).passed());
        let bad = mk(Function::Ann, &[0, 0, 0, 0, 0]);
        let rep = brick_corson_check(&area, &cl, &bad, 5);
        assert!(!rep.passed());
        assert!(rep.violations[0].contains("Area 1 > Ann 0"));
    }
}
