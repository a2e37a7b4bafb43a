//! Weight vectors lambda_J: JSON weight files, presets, and seeded random draws.
//!
//! Weight file format:
//!
//! ```json
//! {"basis": "x", "weights": {"": "1", "s1": 2, "s1,s3": "3/2"}}
//! ```
//!
//! Keys name subsets by their generators (`""` is the empty set); values are
//! integers or `"p/q"` strings. `basis` is `"x"` (default) or `"y"`.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use coxdesc_core::arith::Rational;
use coxdesc_core::coxeter::{CoxeterSpec, SubsetMask};
use coxdesc_core::descent::{Basis, DescentElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

/// Bound on numerators and denominators of random weights.
pub const RANDOM_HEIGHT: i64 = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// lambda_J = 1 for every J, in the x-basis.
    Uniform,
    /// sum_J q^{Maj(J)} y_J with Maj(J) the sum of the (1-based) indices in J.
    QMaj(Rational),
    /// sum_J (sum_{i in J} X_i) y_J.
    DesX(Vec<Rational>),
}

impl FromStr for Preset {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        let bad = |msg: String| CliError::Usage(format!("preset {s:?}: {msg}"));
        if s == "uniform" {
            return Ok(Preset::Uniform);
        }
        if let Some(q) = s.strip_prefix("qmaj:") {
            return q.parse().map(Preset::QMaj).map_err(|e| bad(format!("{e}")));
        }
        if let Some(xs) = s.strip_prefix("desx:") {
            return xs
                .split(',')
                .map(|x| x.trim().parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()
                .map(Preset::DesX)
                .map_err(|e| bad(format!("{e}")));
        }
        Err(bad("expected uniform, qmaj:Q or desx:X1,...,Xn".into()))
    }
}

pub fn maj(j: SubsetMask) -> u32 {
    j.iter().map(|i| i as u32 + 1).sum()
}

pub fn preset_element(preset: &Preset, spec: &CoxeterSpec) -> CliResult<DescentElement> {
    let rank = spec.rank();
    if !matches!(preset, Preset::Uniform) && !spec.is_type_a() {
        return Err(CliError::Usage(format!(
            "presets qmaj and desx are defined for type A only, not {}",
            spec.label()
        )));
    }
    Ok(match preset {
        Preset::Uniform => DescentElement::from_dense(rank, Basis::X, vec![Rational::one(); 1 << rank]),
        Preset::QMaj(q) => {
            let coeffs = SubsetMask::all(rank)
                .map(|j| q.pow(maj(j) as i32))
                .collect::<Result<Vec<_>, _>>()?;
            DescentElement::from_dense(rank, Basis::Y, coeffs)
        }
        Preset::DesX(xs) => {
            if xs.len() != rank {
                return Err(CliError::Usage(format!("desx needs {} values, got {}", rank, xs.len())));
            }
            let coeffs = SubsetMask::all(rank).map(|j| j.iter().map(|i| xs[i].clone()).sum()).collect();
            DescentElement::from_dense(rank, Basis::Y, coeffs)
        }
    })
}

/// Uniform random rationals a/b with |a| <= 100 and 1 <= b <= 100, one per
/// subset in ascending mask order.
pub fn random_element(rank: usize, seed: u64) -> DescentElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..1usize << rank)
        .map(|_| {
            let num = rng.gen_range(-RANDOM_HEIGHT..=RANDOM_HEIGHT);
            let den = rng.gen_range(1..=RANDOM_HEIGHT);
            Rational::new(num, den).expect("nonzero denominator")
        })
        .collect();
    DescentElement::from_dense(rank, Basis::X, coeffs)
}

#[derive(Serialize, Deserialize)]
struct WeightFile {
    #[serde(default)]
    basis: Option<String>,
    weights: BTreeMap<String, Value>,
}

pub fn load_weight_file(path: &Path, rank: usize) -> CliResult<DescentElement> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_weights(&text, rank)
}

pub fn parse_weights(text: &str, rank: usize) -> CliResult<DescentElement> {
    let file: WeightFile = serde_json::from_str(text).map_err(|e| CliError::Weights(e.to_string()))?;
    let basis = match file.basis.as_deref() {
        None | Some("x") => Basis::X,
        Some("y") => Basis::Y,
        Some(other) => return Err(CliError::Weights(format!("unknown basis {other:?}, expected \"x\" or \"y\""))),
    };
    let mut d = DescentElement::zero(rank, basis);
    for (key, value) in &file.weights {
        let j = SubsetMask::parse_name(key, rank)
            .ok_or_else(|| CliError::Weights(format!("key {key:?} is not a subset of s1..s{rank}")))?;
        let lambda = match value {
            Value::String(s) => s.parse::<Rational>().ok(),
            Value::Number(n) => n.as_i64().map(Rational::from_integer),
            _ => None,
        }
        .ok_or_else(|| CliError::Weights(format!("key {key:?}: value {value} is not a rational")))?;
        d.set(j, lambda);
    }
    Ok(d)
}

/// JSON form of a weight vector, in the file format above; zero weights are
/// omitted.
pub fn weights_json(d: &DescentElement) -> Value {
    let basis = match d.basis() {
        Basis::X => "x",
        Basis::Y => "y",
    };
    let weights: serde_json::Map<String, Value> = d
        .nonzero()
        .map(|(j, c)| (j.name(), Value::String(c.to_string())))
        .collect();
    serde_json::json!({ "basis": basis, "weights": weights })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maj_of_t1_t3() {
        assert_eq!(maj(SubsetMask::from_indices([0, 2])), 4);
    }

    #[test]
    fn qmaj_weights() {
        let spec = CoxeterSpec::named("A3").unwrap();
        let d = preset_element(&"qmaj:2".parse().unwrap(), &spec).unwrap();
        assert_eq!(d.basis(), Basis::Y);
        assert_eq!(d.coeff(SubsetMask::from_indices([0, 2])), &Rational::from_integer(16));
        assert_eq!(d.coeff(SubsetMask::EMPTY), &Rational::one());
    }

    #[test]
    fn desx_weights() {
        let spec = CoxeterSpec::named("A2").unwrap();
        let d = preset_element(&"desx:1/2,3".parse().unwrap(), &spec).unwrap();
        assert_eq!(d.coeff(SubsetMask::full(2)), &Rational::new(7, 2).unwrap());
        assert!(preset_element(&"desx:1".parse().unwrap(), &spec).is_err());
    }

    #[test]
    fn presets_rejected_outside_type_a() {
        let spec = CoxeterSpec::named("B3").unwrap();
        assert!(preset_element(&"qmaj:2".parse().unwrap(), &spec).is_err());
        assert!(preset_element(&Preset::Uniform, &spec).is_ok());
    }

    #[test]
    fn weight_file_round_trip() {
        let d = parse_weights(r#"{"basis": "x", "weights": {"": "1", "s1,s3": "3/2", "s2": -4}}"#, 3).unwrap();
        assert_eq!(d.coeff(SubsetMask::from_indices([0, 2])), &Rational::new(3, 2).unwrap());
        assert_eq!(d.coeff(SubsetMask::singleton(1)), &Rational::from_integer(-4));
        let again = parse_weights(&weights_json(&d).to_string(), 3).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn bad_keys_are_named() {
        let err = parse_weights(r#"{"weights": {"s9": "1"}}"#, 3).unwrap_err().to_string();
        assert!(err.contains("s9"), "{err}");
        let err = parse_weights(r#"{"weights": {"s1": "1/0"}}"#, 3).unwrap_err().to_string();
        assert!(err.contains("\"s1\""), "{err}");
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(random_element(3, 7), random_element(3, 7));
        assert_ne!(random_element(3, 7), random_element(3, 8));
        for c in random_element(4, 1).coeffs() {
            assert!(c.numer().magnitude() <= &100u32.into());
            assert!(c.denom() <= &100.into());
        }
    }
}
