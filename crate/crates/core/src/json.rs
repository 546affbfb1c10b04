//! JSON forms of the library's values. Vertices are 1-based, rationals are
//! "num/den" strings and polynomials in t are ascending coefficient arrays.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{format_rational, parse_rational, IntPartition, Rational, SetPartition, TPoly};
use crate::error::{Error, Result};
use crate::graphs::Multigraph;
use crate::kernel::{CertificateStep, Friendliness, GraphCombination, Reduction, XFriendliness};
use crate::quasi::{Digraph, TruncatedQFunc};
use crate::symfun::{Basis, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
}

fn to_zero_based(pairs: &[[usize; 2]], n: usize) -> Result<Vec<(usize, usize)>> {
    pairs
        .iter()
        .map(|&[u, v]| {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            Ok((u - 1, v - 1))
        })
        .collect()
}

impl GraphJson {
    pub fn from_graph(g: &Multigraph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            weights: (!g.has_unit_weights()).then(|| g.weights().to_vec()),
        }
    }

    pub fn to_graph(&self) -> Result<Multigraph> {
        let edges = to_zero_based(&self.edges, self.n)?;
        let weights = self.weights.clone().unwrap_or_else(|| vec![1; self.n]);
        Multigraph::new(self.n, edges, weights)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
}

impl DigraphJson {
    pub fn from_digraph(d: &Digraph) -> Self {
        DigraphJson {
            n: d.n(),
            arcs: d.arcs().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
            weights: Some(d.weights().to_vec()),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        let arcs = to_zero_based(&self.arcs, self.n)?;
        let weights = self.weights.clone().unwrap_or_else(|| vec![1; self.n]);
        Digraph::new(self.n, arcs, weights)
    }
}

pub fn rational_json(r: &Rational) -> String {
    format_rational(r)
}

pub fn tpoly_json(p: &TPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

pub fn tpoly_from_json(c: &[String]) -> Result<TPoly> {
    Ok(TPoly::from_coeffs(
        c.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?,
    ))
}

/// Blocks as sorted lists of 1-based vertices.
pub fn partition_json(pi: &SetPartition) -> Vec<Vec<usize>> {
    pi.blocks()
        .iter()
        .map(|b| b.iter().map(|v| v + 1).collect())
        .collect()
}

pub fn partition_from_json(n: usize, blocks: &[Vec<usize>]) -> Result<SetPartition> {
    let zero_based = blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(|&v| {
                    if v == 0 || v > n {
                        Err(Error::ElementOutOfRange { element: v, n })
                    } else {
                        Ok(v - 1)
                    }
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    SetPartition::from_blocks(n, &zero_based)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTermJson {
    pub lambda: Vec<u32>,
    pub coeff: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub basis: String,
    pub terms: Vec<SymTermJson>,
}

impl SymFuncJson {
    pub fn from_symfunc(f: &SymFunc) -> Self {
        SymFuncJson {
            basis: f.basis().name().to_string(),
            terms: f
                .terms()
                .iter()
                .map(|(lambda, c)| SymTermJson {
                    lambda: lambda.parts().to_vec(),
                    coeff: tpoly_json(c),
                })
                .collect(),
        }
    }

    pub fn to_symfunc(&self) -> Result<SymFunc> {
        let basis = Basis::parse(&self.basis)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((IntPartition::new(t.lambda.clone()), tpoly_from_json(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymFunc::from_terms(basis, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationTermJson {
    pub coeff: Vec<String>,
    pub graph: GraphJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationJson {
    pub n: usize,
    pub terms: Vec<CombinationTermJson>,
}

impl CombinationJson {
    pub fn from_combination(l: &GraphCombination) -> Self {
        CombinationJson {
            n: l.n(),
            terms: l
                .terms()
                .iter()
                .map(|(g, c)| CombinationTermJson {
                    coeff: tpoly_json(c),
                    graph: GraphJson::from_graph(g),
                })
                .collect(),
        }
    }

    pub fn to_combination(&self) -> Result<GraphCombination> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((tpoly_from_json(&t.coeff)?, t.graph.to_graph()?)))
            .collect::<Result<Vec<_>>>()?;
        GraphCombination::from_terms(self.n, terms)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlinessJson {
    pub friendly: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Vec<String>>,
}

impl FriendlinessJson {
    pub fn from_tutte(f: &Friendliness) -> Self {
        match f {
            Friendliness::Friendly => Self::friendly(),
            Friendliness::Violation { pi, a, value } => FriendlinessJson {
                friendly: false,
                pi: Some(partition_json(pi)),
                a: Some(*a),
                value: Some(tpoly_json(value)),
            },
        }
    }

    pub fn from_x(f: &XFriendliness) -> Self {
        match f {
            XFriendliness::Friendly => Self::friendly(),
            XFriendliness::Violation { pi, value } => FriendlinessJson {
                friendly: false,
                pi: Some(partition_json(pi)),
                a: None,
                value: Some(vec![format_rational(value)]),
            },
        }
    }

    fn friendly() -> Self {
        FriendlinessJson {
            friendly: true,
            pi: None,
            a: None,
            value: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub gen: String,
    pub coeff: Vec<String>,
    pub host: GraphJson,
    /// perm[i] is the actual vertex of frame vertex i + 1.
    pub perm: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<[usize; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<u8>,
    pub source: GraphJson,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub products: Vec<GraphJson>,
}

impl StepJson {
    pub fn from_step(s: &CertificateStep) -> Self {
        StepJson {
            gen: s.generator.name().to_string(),
            coeff: tpoly_json(&s.coeff),
            host: GraphJson::from_graph(&s.host),
            perm: s.perm.iter().map(|v| v + 1).collect(),
            triple: s.triple.map(|(a, b, c)| [a + 1, b + 1, c + 1]),
            case: s.case,
            source: GraphJson::from_graph(&s.source),
            products: s.products.iter().map(GraphJson::from_graph).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarForestTermJson {
    pub lambda: Vec<u32>,
    pub k: usize,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionJson {
    pub terms: Vec<StarForestTermJson>,
    pub certificate: Vec<StepJson>,
}

impl ReductionJson {
    pub fn from_reduction(r: &Reduction) -> Self {
        ReductionJson {
            terms: r
                .terms
                .iter()
                .map(|t| StarForestTermJson {
                    lambda: t.lambda.parts().to_vec(),
                    k: t.k,
                    c: format_rational(&t.c),
                })
                .collect(),
            certificate: r.certificate.iter().map(StepJson::from_step).collect(),
        }
    }
}

/// One monomial of a truncated quasisymmetric function; `coeff` lists
/// `[q-degree, t-degree, coefficient]` triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QTermJson {
    pub exponents: Vec<u32>,
    pub coeff: Vec<(u32, u32, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFuncJson {
    pub vars: usize,
    pub terms: Vec<QTermJson>,
}

impl QFuncJson {
    pub fn from_qfunc(f: &TruncatedQFunc) -> Self {
        QFuncJson {
            vars: f.vars(),
            terms: f
                .terms()
                .into_iter()
                .rev()
                .map(|(exponents, p)| QTermJson {
                    exponents,
                    coeff: p.into_iter().map(|((a, b), c)| (a, b, c)).collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"n": 3, "edges": [[1,2],[1,2],[3,3]], "weights": [1,1,2]}"#;
        let parsed: GraphJson = serde_json::from_str(text).unwrap();
        let g = parsed.to_graph().unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (2, 2)]);
        assert_eq!(GraphJson::from_graph(&g), parsed);
        let bad: GraphJson = serde_json::from_str(r#"{"n": 2, "edges": [[0,1]]}"#).unwrap();
        assert!(bad.to_graph().is_err());
    }

    #[test]
    fn symfunc_round_trip() {
        let text = r#"{"basis": "mtilde", "terms": [{"lambda": [2,1], "coeff": ["1/1","2/1"]}]}"#;
        let parsed: SymFuncJson = serde_json::from_str(text).unwrap();
        let f = parsed.to_symfunc().unwrap();
        assert_eq!(SymFuncJson::from_symfunc(&f), parsed);
    }

    #[test]
    fn combination_round_trip() {
        let l = crate::kernel::ell_multi();
        let j = CombinationJson::from_combination(&l);
        let text = serde_json::to_string(&j).unwrap();
        let back: CombinationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_combination().unwrap(), l);
    }

    #[test]
    fn partition_round_trip() {
        let pi = partition_from_json(4, &[vec![1, 3], vec![2], vec![4]]).unwrap();
        assert_eq!(partition_json(&pi), vec![vec![1, 3], vec![2], vec![4]]);
    }
}
