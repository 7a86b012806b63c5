use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SynthError;
use crate::graph::{is_adjacent, AdjacencyCertificate, Direction};
use crate::notation::parse_cycles;
use crate::perm::{PermError, Permutation};

/// Which construction produced a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LemmaTag {
    Bridge21,
    ThreeCycles22,
    PrimeSmall23,
    PrimeGeneral24,
    AnyPair31,
    #[allow(non_camel_case_types)]
    Diam8_35,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness {
    pub n: usize,
    pub vertices: Vec<Permutation>,
    pub certificates: Vec<AdjacencyCertificate>,
    pub lemma_tag: LemmaTag,
    pub declared_bound: usize,
    /// Human-readable name of the branch that built the path.
    pub case: String,
    /// Built for a degree outside the proven range.
    pub best_effort: bool,
}

/// Certifies every edge of `vertices` and checks the bound.
pub fn certify(
    vertices: Vec<Permutation>,
    lemma_tag: LemmaTag,
    declared_bound: usize,
    case: impl Into<String>,
) -> Result<PathWitness, SynthError> {
    let case = case.into();
    let n = vertices.first().map(Permutation::degree).unwrap_or(0);
    if vertices.iter().any(Permutation::is_identity) {
        return Err(SynthError::Identity);
    }
    let mut certificates = Vec::with_capacity(vertices.len().saturating_sub(1));
    for (index, w) in vertices.windows(2).enumerate() {
        match is_adjacent(&w[0], &w[1])? {
            Some(c) => certificates.push(c),
            None => {
                return Err(SynthError::BrokenEdge {
                    index,
                    from: w[0].to_string(),
                    to: w[1].to_string(),
                })
            }
        }
    }
    if certificates.len() > declared_bound {
        return Err(SynthError::BoundExceeded {
            length: certificates.len(),
            bound: declared_bound,
            case,
        });
    }
    Ok(PathWitness {
        n,
        vertices,
        certificates,
        lemma_tag,
        declared_bound,
        case,
        best_effort: false,
    })
}

impl PathWitness {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.certificates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.certificates.is_empty()
    }

    pub fn from(&self) -> &Permutation {
        &self.vertices[0]
    }

    pub fn to(&self) -> &Permutation {
        self.vertices
            .last()
            .expect("a witness has at least one vertex")
    }

    /// Re-checks every certificate against the stored vertices.
    pub fn validate(&self) -> Result<(), SynthError> {
        if self.vertices.is_empty() || self.vertices.len() != self.certificates.len() + 1 {
            return Err(SynthError::Precondition(
                "vertex and certificate counts disagree".into(),
            ));
        }
        if self.vertices.iter().any(|v| v.degree() != self.n) {
            return Err(SynthError::Precondition(
                "vertex degree differs from n".into(),
            ));
        }
        if self.vertices.iter().any(Permutation::is_identity) {
            return Err(SynthError::Identity);
        }
        for (index, (w, c)) in self.vertices.windows(2).zip(&self.certificates).enumerate() {
            if !c.validates(&w[0], &w[1]) {
                return Err(SynthError::BrokenEdge {
                    index,
                    from: w[0].to_string(),
                    to: w[1].to_string(),
                });
            }
        }
        if self.len() > self.declared_bound {
            return Err(SynthError::BoundExceeded {
                length: self.len(),
                bound: self.declared_bound,
                case: self.case.clone(),
            });
        }
        Ok(())
    }

    /// The same path walked backwards.
    pub fn reversed(&self) -> PathWitness {
        let mut w = self.clone();
        w.vertices.reverse();
        w.certificates = self
            .certificates
            .iter()
            .rev()
            .map(|c| c.reversed())
            .collect();
        w
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(WireWitness {
            n: self.n,
            from: self.from().to_string(),
            to: self.to().to_string(),
            vertices: self.vertices.iter().map(ToString::to_string).collect(),
            certificates: self
                .certificates
                .iter()
                .map(|c| WireCertificate {
                    direction: c.direction,
                    exponent: c.exponent.to_string(),
                })
                .collect(),
            lemma_tag: self.lemma_tag,
            declared_bound: self.declared_bound,
            length: self.len(),
            best_effort: self.best_effort,
        })
        .expect("witness serializes")
    }

    /// Decodes and fully validates a witness.
    pub fn from_json(text: &str) -> Result<PathWitness, WitnessJsonError> {
        let wire: WireWitness =
            serde_json::from_str(text).map_err(|e| WitnessJsonError::Json(e.to_string()))?;
        if wire.n == 0 || wire.n > MAX_JSON_DEGREE {
            return Err(WitnessJsonError::Inconsistent("degree out of range"));
        }
        if wire.vertices.is_empty() || wire.vertices.len() > MAX_JSON_VERTICES {
            return Err(WitnessJsonError::Inconsistent("vertex count out of range"));
        }
        if wire.certificates.len() + 1 != wire.vertices.len()
            || wire.length != wire.certificates.len()
        {
            return Err(WitnessJsonError::Inconsistent("length fields disagree"));
        }
        let vertices = wire
            .vertices
            .iter()
            .enumerate()
            .map(|(i, s)| parse_cycles(s, wire.n).map_err(|e| WitnessJsonError::Vertex(i, e)))
            .collect::<Result<Vec<_>, _>>()?;
        if parse_cycles(&wire.from, wire.n).ok().as_ref() != vertices.first()
            || parse_cycles(&wire.to, wire.n).ok().as_ref() != vertices.last()
        {
            return Err(WitnessJsonError::Inconsistent(
                "endpoints disagree with vertices",
            ));
        }
        let certificates = wire
            .certificates
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let digits = &c.exponent;
                if digits.is_empty()
                    || digits.len() > MAX_EXPONENT_DIGITS
                    || !digits.bytes().all(|b| b.is_ascii_digit())
                {
                    return Err(WitnessJsonError::Exponent(i));
                }
                let exponent: BigUint =
                    digits.parse().map_err(|_| WitnessJsonError::Exponent(i))?;
                Ok(AdjacencyCertificate {
                    direction: c.direction,
                    exponent,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let w = PathWitness {
            n: wire.n,
            vertices,
            certificates,
            lemma_tag: wire.lemma_tag,
            declared_bound: wire.declared_bound,
            case: String::new(),
            best_effort: wire.best_effort,
        };
        w.validate().map_err(WitnessJsonError::Invalid)?;
        Ok(w)
    }
}

const MAX_JSON_DEGREE: usize = 1 << 16;
const MAX_JSON_VERTICES: usize = 1024;
const MAX_EXPONENT_DIGITS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessJsonError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("vertex {0}: {1}")]
    Vertex(usize, PermError),
    #[error("certificate {0}: exponent is not a decimal string")]
    Exponent(usize),
    #[error("inconsistent witness: {0}")]
    Inconsistent(&'static str),
    #[error("witness does not validate: {0}")]
    Invalid(SynthError),
}

#[derive(Serialize, Deserialize)]
struct WireCertificate {
    direction: Direction,
    exponent: String,
}

#[derive(Serialize, Deserialize)]
struct WireWitness {
    n: usize,
    from: String,
    to: String,
    vertices: Vec<String>,
    certificates: Vec<WireCertificate>,
    lemma_tag: LemmaTag,
    declared_bound: usize,
    length: usize,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    best_effort: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    fn sample() -> PathWitness {
        let v = vec![
            p(7, "(1 2 3)"),
            p(7, "(1 2 3)(4 5)(6 7)"),
            p(7, "(4 5)(6 7)"),
        ];
        certify(v, LemmaTag::Bridge21, 2, "test").unwrap()
    }

    #[test]
    fn certify_rejects_non_edges_and_overlong_paths() {
        let v = vec![p(6, "(1 2 3)"), p(6, "(4 5 6)")];
        assert!(matches!(
            certify(v, LemmaTag::Bridge21, 2, ""),
            Err(SynthError::BrokenEdge { index: 0, .. })
        ));
        let w = sample();
        assert!(matches!(
            certify(w.vertices, LemmaTag::Bridge21, 1, ""),
            Err(SynthError::BoundExceeded {
                length: 2,
                bound: 1,
                ..
            })
        ));
    }

    #[test]
    fn json_round_trip() {
        let w = sample();
        let text = w.to_json().to_string();
        let back = PathWitness::from_json(&text).unwrap();
        assert_eq!(back.vertices, w.vertices);
        assert_eq!(back.certificates, w.certificates);
        assert_eq!(back.lemma_tag, LemmaTag::Bridge21);
        let v = w.to_json();
        assert_eq!(v["length"], 2);
        assert_eq!(v["from"], "(1 2 3)");
        assert_eq!(v["certificates"][0]["direction"], "FirstIsPowerOfSecond");
        assert_eq!(v["certificates"][0]["exponent"], "4");
        assert!(v.get("best_effort").is_none());
    }

    #[test]
    fn json_rejects_tampering() {
        let mut v = sample().to_json();
        v["certificates"][0]["exponent"] = "5".into();
        assert!(matches!(
            PathWitness::from_json(&v.to_string()),
            Err(WitnessJsonError::Invalid(_))
        ));
        let mut v = sample().to_json();
        v["length"] = 3.into();
        assert!(PathWitness::from_json(&v.to_string()).is_err());
        let mut v = sample().to_json();
        v["certificates"][0]["exponent"] = "-4".into();
        assert_eq!(
            PathWitness::from_json(&v.to_string()),
            Err(WitnessJsonError::Exponent(0))
        );
        assert!(PathWitness::from_json("{").is_err());
    }

    #[test]
    fn reversed_path_validates() {
        let w = sample().reversed();
        w.validate().unwrap();
        assert_eq!(w.from(), &p(7, "(4 5)(6 7)"));
    }
}
