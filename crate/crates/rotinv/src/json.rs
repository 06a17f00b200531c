//! JSON shapes shared by the command-line tool and its consumers.

use num_complex::Complex64;
use rotinv_core::monoid::PolynomialGenerator;
use rotinv_core::moments::InvarianceReport;
use rotinv_core::{EigenSymbol, ExponentVector, LinearForm, RationalGenerator, RationalKind};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub n: u32,
    pub s: i32,
    pub e: u32,
}

/// `{"monomial": [{"n":3,"s":1,"e":2}, …], "degree": 3}`, plus `"kind"` for
/// rational generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub monomial: Vec<FactorJson>,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

fn factors(m: &ExponentVector) -> Vec<FactorJson> {
    m.iter().map(|(sym, e)| FactorJson { n: sym.n, s: sym.s, e }).collect()
}

impl From<&PolynomialGenerator> for GeneratorJson {
    fn from(g: &PolynomialGenerator) -> Self {
        Self {
            monomial: factors(&g.monomial),
            degree: g.degree,
            kind: None,
        }
    }
}

impl From<&RationalGenerator> for GeneratorJson {
    fn from(g: &RationalGenerator) -> Self {
        Self {
            monomial: factors(&g.factors),
            degree: g.degree(),
            kind: Some(g.kind.as_str().to_owned()),
        }
    }
}

impl GeneratorJson {
    /// Validated exponent vector.
    pub fn to_exponents(&self) -> Result<ExponentVector> {
        let mut pairs = Vec::with_capacity(self.monomial.len());
        for f in &self.monomial {
            pairs.push((EigenSymbol::new(f.n, f.s)?, f.e));
        }
        let m = ExponentVector::from_pairs(pairs);
        if m.degree() != self.degree {
            return Err(Error::Format(format!(
                "generator {m} has degree {} but declares {}",
                m.degree(),
                self.degree
            )));
        }
        if let Some(kind) = &self.kind {
            if RationalKind::parse(kind).is_none() {
                return Err(Error::Format(format!("unknown generator kind {kind:?}")));
            }
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureJson {
    pub name: String,
    pub value: [f64; 2],
}

/// `{"d":4, "anchor":[3,1], "features":[{"name":"b4","value":[re,im]}, …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeaturesJson {
    pub d: u32,
    pub anchor: [i64; 2],
    pub features: Vec<FeatureJson>,
}

pub fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenJson {
    pub n: u32,
    pub s: i32,
    /// Coefficients of `a[n−j, j]`, `j = 0..=n`, as Gaussian rationals.
    pub coefficients: Vec<String>,
}

impl EigenJson {
    pub fn new(sym: EigenSymbol, form: &LinearForm) -> Self {
        Self {
            n: sym.n,
            s: sym.s,
            coefficients: form.coefficients.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeviationJson {
    pub name: String,
    pub generator: String,
    pub value: [f64; 2],
    pub im_residue: f64,
    pub max_relative_deviation: f64,
    pub vanishing: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub d: u32,
    pub anchor: [i64; 2],
    pub input: String,
    pub angles: Vec<f64>,
    pub max_relative_deviation: f64,
    pub degenerate: bool,
    pub seed: u64,
    pub jacobian_independent: bool,
    pub generators: Vec<DeviationJson>,
}

impl VerifyJson {
    pub fn new(
        report: &InvarianceReport,
        gens: &[RationalGenerator],
        input: &str,
        seed: u64,
        jacobian_independent: bool,
    ) -> Self {
        Self {
            d: report.d,
            anchor: [report.anchor.0 as i64, report.anchor.1 as i64],
            input: input.to_owned(),
            angles: report.angles.clone(),
            max_relative_deviation: report.max_relative_deviation,
            degenerate: report.degenerate,
            seed,
            jacobian_independent,
            generators: report
                .generators
                .iter()
                .zip(gens)
                .map(|(r, g)| DeviationJson {
                    name: r.name.clone(),
                    generator: g.short_name(),
                    value: complex_pair(r.value),
                    im_residue: r.im_residue,
                    max_relative_deviation: r.max_relative_deviation,
                    vanishing: r.vanishing,
                })
                .collect(),
        }
    }
}
