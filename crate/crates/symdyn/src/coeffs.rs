//! Coefficient systems: exchangeable weights c_S^n on coordinate subsets,
//! depending only on |S|. All named families arise as integrals
//! c(n,k) = ∫ x^k (1-x)^{n-k} dλ(x) against a symmetric probability measure
//! λ on [0,1]; the evaluator exposes that representation directly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A system of subset weights, evaluated by subset size.
///
/// Every kind satisfies nonnegativity, the normalization
/// Σ_k C(n,k) c(n,k) = 1, and the complement symmetry c(n,k) = c(n,n-k).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CoefficientSystem {
    /// c(n,k) = 2^{-n}: the point mass at 1/2.
    Uniform,
    /// c(n,k) = 1/((n+1) C(n,k)): Lebesgue measure on [0,1].
    Neural,
    /// c(n,k) = (p^k (1-p)^{n-k} + (1-p)^k p^{n-k}) / 2.
    PSymmetric { p: f64 },
    /// Explicit symmetric measure: weighted atoms plus a Lebesgue component.
    FromMeasure {
        /// (location, weight) pairs; must be symmetric about 1/2.
        atoms: Vec<(f64, f64)>,
        lebesgue_weight: f64,
    },
}

impl CoefficientSystem {
    pub fn p_symmetric(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::BadProbability { name: "p".into(), value: p });
        }
        Ok(CoefficientSystem::PSymmetric { p })
    }

    pub fn from_measure(atoms: Vec<(f64, f64)>, lebesgue_weight: f64) -> Result<Self> {
        let cs = CoefficientSystem::FromMeasure { atoms, lebesgue_weight };
        cs.validate()?;
        Ok(cs)
    }

    /// Check the defining constraints of the measure form.
    pub fn validate(&self) -> Result<()> {
        if let CoefficientSystem::FromMeasure { atoms, lebesgue_weight } = self {
            let total: f64 = atoms.iter().map(|(_, w)| w).sum::<f64>() + lebesgue_weight;
            if (total - 1.0).abs() > 1e-9 || *lebesgue_weight < 0.0 {
                return Err(Error::AsymmetricMeasure);
            }
            for &(x, w) in atoms {
                if !(0.0..=1.0).contains(&x) || w < 0.0 {
                    return Err(Error::AsymmetricMeasure);
                }
                // the mirror atom must carry the same weight
                let mirrored: f64 = atoms
                    .iter()
                    .filter(|(y, _)| (y - (1.0 - x)).abs() < 1e-12)
                    .map(|(_, v)| v)
                    .sum();
                if (mirrored - w).abs() > 1e-9 {
                    return Err(Error::AsymmetricMeasure);
                }
            }
        }
        if let CoefficientSystem::PSymmetric { p } = self {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::BadProbability { name: "p".into(), value: *p });
            }
        }
        Ok(())
    }

    /// The vector c(n, 0..=n).
    pub fn coefficients(&self, n: usize) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::InvalidArgument("coefficients need n >= 1".into()));
        }
        self.validate()?;
        let out = match self {
            CoefficientSystem::Uniform => {
                let c = 0.5f64.powi(n as i32);
                vec![c; n + 1]
            }
            CoefficientSystem::Neural => (0..=n)
                .map(|k| 1.0 / ((n as f64 + 1.0) * binomial(n, k)))
                .collect(),
            CoefficientSystem::PSymmetric { p } => (0..=n)
                .map(|k| {
                    0.5 * (p.powi(k as i32) * (1.0 - p).powi((n - k) as i32)
                        + (1.0 - p).powi(k as i32) * p.powi((n - k) as i32))
                })
                .collect(),
            CoefficientSystem::FromMeasure { atoms, lebesgue_weight } => (0..=n)
                .map(|k| {
                    let atomic: f64 = atoms
                        .iter()
                        .map(|&(x, w)| w * x.powi(k as i32) * (1.0 - x).powi((n - k) as i32))
                        .sum();
                    // ∫ x^k (1-x)^{n-k} dx = k!(n-k)!/(n+1)! = 1/((n+1) C(n,k))
                    atomic + lebesgue_weight / ((n as f64 + 1.0) * binomial(n, k))
                })
                .collect(),
        };
        Ok(out)
    }

    pub fn label(&self) -> String {
        match self {
            CoefficientSystem::Uniform => "uniform".into(),
            CoefficientSystem::Neural => "neural".into(),
            CoefficientSystem::PSymmetric { p } => format!("psym:{p}"),
            CoefficientSystem::FromMeasure { .. } => "measure".into(),
        }
    }

    /// Parse the CLI form: `uniform`, `neural` or `psym:0.3`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "uniform" => Ok(CoefficientSystem::Uniform),
            "neural" => Ok(CoefficientSystem::Neural),
            other => {
                if let Some(p) = other.strip_prefix("psym:") {
                    let p: f64 = p
                        .parse()
                        .map_err(|_| Error::InvalidArgument(format!("bad p in {other:?}")))?;
                    CoefficientSystem::p_symmetric(p)
                } else {
                    Err(Error::InvalidArgument(format!("unknown weight system {other:?}")))
                }
            }
        }
    }
}

/// Binomial coefficient as f64 (exact for the sizes used here).
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_invariants(cs: &CoefficientSystem, n_max: usize) {
        for n in 1..=n_max {
            let c = cs.coefficients(n).unwrap();
            assert!(c.iter().all(|&x| x >= 0.0));
            let total: f64 = (0..=n).map(|k| binomial(n, k) * c[k]).sum();
            assert!((total - 1.0).abs() < 1e-12, "{} n={n} total={total}", cs.label());
            for k in 0..=n {
                assert!((c[k] - c[n - k]).abs() < 1e-12, "{} n={n} k={k}", cs.label());
            }
        }
    }

    #[test]
    fn invariants_all_kinds() {
        check_invariants(&CoefficientSystem::Uniform, 30);
        check_invariants(&CoefficientSystem::Neural, 30);
        check_invariants(&CoefficientSystem::p_symmetric(0.3).unwrap(), 30);
        check_invariants(
            &CoefficientSystem::from_measure(vec![(0.25, 0.3), (0.75, 0.3)], 0.4).unwrap(),
            30,
        );
    }

    #[test]
    fn lebesgue_measure_gives_neural_weights() {
        let lebesgue = CoefficientSystem::from_measure(vec![], 1.0).unwrap();
        let neural = CoefficientSystem::Neural;
        for n in 1..=30 {
            let a = lebesgue.coefficients(n).unwrap();
            let b = neural.coefficients(n).unwrap();
            for k in 0..=n {
                assert!((a[k] - b[k]).abs() <= 1e-12 * b[k].max(1.0), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn half_atom_gives_uniform() {
        let atom = CoefficientSystem::from_measure(vec![(0.5, 1.0)], 0.0).unwrap();
        for n in 1..=20 {
            let a = atom.coefficients(n).unwrap();
            let u = CoefficientSystem::Uniform.coefficients(n).unwrap();
            for k in 0..=n {
                assert!((a[k] - u[k]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn psym_half_is_uniform() {
        let p = CoefficientSystem::p_symmetric(0.5).unwrap();
        for n in 1..=20 {
            let a = p.coefficients(n).unwrap();
            let u = CoefficientSystem::Uniform.coefficients(n).unwrap();
            assert_eq!(a, u);
        }
    }

    #[test]
    fn asymmetric_measure_rejected() {
        assert!(CoefficientSystem::from_measure(vec![(0.3, 1.0)], 0.0).is_err());
        assert!(CoefficientSystem::from_measure(vec![(0.5, 0.4)], 0.0).is_err());
    }

    #[test]
    fn parse_cli_forms() {
        assert_eq!(CoefficientSystem::parse("uniform").unwrap(), CoefficientSystem::Uniform);
        assert_eq!(CoefficientSystem::parse("neural").unwrap(), CoefficientSystem::Neural);
        assert!(matches!(
            CoefficientSystem::parse("psym:0.3").unwrap(),
            CoefficientSystem::PSymmetric { .. }
        ));
        assert!(CoefficientSystem::parse("psym:1.5").is_err());
        assert!(CoefficientSystem::parse("nope").is_err());
    }
}
