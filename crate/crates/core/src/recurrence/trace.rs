//! Derivation trees recorded by the planner.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use super::formulas;
use crate::graph::Graph;

/// Closed-form families recognized on 2-connected pieces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum ClosedForm {
    Vertex,
    Edge,
    Cycle { n: usize },
    Complete { n: usize },
    CompleteMinusMatching { n: usize, k: usize },
    K2m { n: usize },
}

impl ClosedForm {
    pub fn value(&self) -> BigUint {
        match *self {
            ClosedForm::Vertex => BigUint::one(),
            ClosedForm::Edge => BigUint::from(2u32),
            ClosedForm::Cycle { n } => formulas::nvol_cycle(n).expect("valid cycle"),
            ClosedForm::Complete { n } => {
                formulas::nvol_complete_minus_matching(n, 0).expect("valid complete")
            }
            ClosedForm::CompleteMinusMatching { n, k } => {
                formulas::nvol_complete_minus_matching(n, k).expect("valid matching")
            }
            ClosedForm::K2m { n } => formulas::nvol_k2m(n).expect("valid K2m"),
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Vertex => write!(f, "vertex"),
            ClosedForm::Edge => write!(f, "edge"),
            ClosedForm::Cycle { n } => write!(f, "cycle({n})"),
            ClosedForm::Complete { n } => write!(f, "complete({n})"),
            ClosedForm::CompleteMinusMatching { n, k } => {
                write!(f, "complete-minus-matching({n},{k})")
            }
            ClosedForm::K2m { n } => write!(f, "k2m({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Rule {
    /// Product over connected components.
    ComponentProduct,
    /// Product over the blocks of a connected graph.
    BlockProduct,
    ClosedForm {
        form: ClosedForm,
    },
    /// `2^exponent · Π face_lengths` on a 2-connected outerplanar block.
    Outerplanar {
        exponent: usize,
        face_lengths: Vec<usize>,
    },
    /// `vertex` was the subdivision vertex; children are `h` and `h ∖ e`.
    Subdivision {
        vertex: usize,
    },
    /// `vertex` was the triangle apex; the child is `g − vertex`.
    Triangle {
        vertex: usize,
    },
    Enumeration,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::ComponentProduct => write!(f, "component-product"),
            Rule::BlockProduct => write!(f, "block-product"),
            Rule::ClosedForm { form } => write!(f, "closed-form {form}"),
            Rule::Outerplanar {
                exponent,
                face_lengths,
            } => {
                let lens: Vec<String> = face_lengths.iter().map(|x| x.to_string()).collect();
                write!(f, "outerplanar 2^{exponent} faces=[{}]", lens.join(","))
            }
            Rule::Subdivision { vertex } => write!(f, "subdivision x={vertex}"),
            Rule::Triangle { vertex } => write!(f, "triangle x={vertex}"),
            Rule::Enumeration => write!(f, "enumeration"),
        }
    }
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    #[serde(flatten)]
    pub rule: Rule,
    pub n: usize,
    pub m: usize,
    pub fingerprint: String,
    #[serde(serialize_with = "as_decimal")]
    pub value: BigUint,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Trace>,
}

pub const TRACE_HEADER: &str = "nvol-trace v1";

impl Trace {
    pub fn new(g: &Graph, rule: Rule, value: BigUint, children: Vec<Trace>) -> Self {
        Trace {
            rule,
            n: g.n(),
            m: g.edge_count(),
            fingerprint: g.fingerprint(),
            value,
            children,
        }
    }

    /// Recomputes every node from its children and parameters. Returns the
    /// root value, or `None` if any stored value disagrees.
    pub fn replay(&self) -> Option<BigUint> {
        let kids: Vec<BigUint> = self
            .children
            .iter()
            .map(Trace::replay)
            .collect::<Option<_>>()?;
        let value = match &self.rule {
            Rule::ComponentProduct | Rule::BlockProduct => kids.iter().product(),
            Rule::ClosedForm { form } if kids.is_empty() => form.value(),
            Rule::Outerplanar {
                exponent,
                face_lengths,
            } if kids.is_empty() => face_lengths
                .iter()
                .fold(BigUint::one() << *exponent, |acc, &l| acc * l),
            Rule::Subdivision { .. } if kids.len() == 2 => &kids[0] * 2u32 + &kids[1],
            Rule::Triangle { .. } if kids.len() == 1 => &kids[0] * 3u32,
            Rule::Enumeration if kids.is_empty() => self.value.clone(),
            _ => return None,
        };
        (value == self.value).then_some(value)
    }

    /// Number of nodes whose rule satisfies `pred`.
    pub fn count_rule(&self, pred: &dyn Fn(&Rule) -> bool) -> usize {
        pred(&self.rule) as usize
            + self
                .children
                .iter()
                .map(|c| c.count_rule(pred))
                .sum::<usize>()
    }

    /// Indented text form, one node per line, preceded by a version header.
    pub fn to_text(&self) -> String {
        let mut out = String::from(TRACE_HEADER);
        out.push('\n');
        self.write_node(&mut out, 0);
        out
    }

    fn write_node(&self, out: &mut String, depth: usize) {
        let _ = writeln!(
            out,
            "{:indent$}{} n={} m={} fp={} value={}",
            "",
            self.rule,
            self.n,
            self.m,
            self.fingerprint,
            self.value,
            indent = 2 * depth
        );
        for c in &self.children {
            c.write_node(out, depth + 1);
        }
    }
}
