use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::One;

use super::trace::{ClosedForm, Rule, Trace};
use crate::draconian::Enumerator;
use crate::error::Result;
use crate::graph::{Blocks, Graph};
use crate::outerplanar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Product rules, closed forms, the outerplanar formula and reverse
    /// moves, with enumeration as the last resort.
    #[default]
    Auto,
    /// Component product, then enumeration of each component.
    Enumerate,
}

impl std::str::FromStr for Strategy {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "enumerate" | "enumerate-only" => Ok(Strategy::Enumerate),
            _ => Err(crate::Error::Parse(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeResult {
    pub value: BigUint,
    pub trace: Trace,
}

/// Memoizing evaluator. Entries are keyed by the labeled edge set of each
/// 2-connected piece.
#[derive(Debug, Default)]
pub struct Planner {
    pub enumerator: Enumerator,
    memo: RwLock<HashMap<String, Trace>>,
}

impl Planner {
    pub fn new(enumerator: Enumerator) -> Self {
        Planner {
            enumerator,
            memo: RwLock::default(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().map(|m| m.len()).unwrap_or(0)
    }

    pub fn nvol(&self, g: &Graph, strategy: Strategy) -> Result<VolumeResult> {
        let trace = match strategy {
            Strategy::Auto => self.product_rules(g)?,
            Strategy::Enumerate => self.by_components(g, &|h| self.enumeration(h))?,
        };
        Ok(VolumeResult {
            value: trace.value.clone(),
            trace,
        })
    }

    /// Components, then blocks, each block evaluated by the planner.
    pub fn product_rules(&self, g: &Graph) -> Result<Trace> {
        self.by_components(g, &|h| self.connected(h))
    }

    fn by_components(&self, g: &Graph, eval: &dyn Fn(&Graph) -> Result<Trace>) -> Result<Trace> {
        let comps = g.connected_components();
        if comps.len() <= 1 {
            return eval(g);
        }
        let children = comps
            .iter()
            .map(|c| eval(&g.induced_subgraph(c).0))
            .collect::<Result<Vec<_>>>()?;
        Ok(product(g, Rule::ComponentProduct, children))
    }

    fn connected(&self, g: &Graph) -> Result<Trace> {
        if g.n() <= 2 {
            return self.block(g);
        }
        let dec = g.blocks_and_cut_vertices();
        if dec.blocks.len() <= 1 {
            return self.block(g);
        }
        let children = dec
            .blocks
            .iter()
            .map(|b| self.block(&g.edge_subgraph(b).0))
            .collect::<Result<Vec<_>>>()?;
        Ok(product(g, Rule::BlockProduct, children))
    }

    /// A single vertex, a single edge, or a 2-connected graph.
    fn block(&self, g: &Graph) -> Result<Trace> {
        let key = g.canonical_text();
        if let Some(t) = self.memo.read().ok().and_then(|m| m.get(&key).cloned()) {
            return Ok(t);
        }
        let t = self.evaluate_block(g)?;
        if let Ok(mut m) = self.memo.write() {
            m.insert(key, t.clone());
        }
        Ok(t)
    }

    fn evaluate_block(&self, g: &Graph) -> Result<Trace> {
        if let Some(form) = closed_form(g) {
            let value = form.value();
            return Ok(Trace::new(g, Rule::ClosedForm { form }, value, vec![]));
        }
        if outerplanar::is_outerplanar(g) {
            let s = outerplanar::outer_structure(g)?;
            if !s.has_interior_face() {
                let rule = Rule::Outerplanar {
                    exponent: outerplanar::block_exponent(&s),
                    face_lengths: outerplanar::ewd_degrees(&s),
                };
                return Ok(Trace::new(g, rule, outerplanar::block_value(&s), vec![]));
            }
        }
        if let Some(t) = self.reverse_move(g)? {
            return Ok(t);
        }
        self.enumeration(g)
    }

    /// Undoes a triangle join or a subdivision at a degree-2 vertex.
    fn reverse_move(&self, g: &Graph) -> Result<Option<Trace>> {
        for x in g.vertices().filter(|&x| g.degree(x) == 2) {
            let (v, w) = (g.neighbors(x)[0], g.neighbors(x)[1]);
            let (rest, map) = g.delete_vertex(x)?;
            let (v2, w2) = (
                map.new_label(v).expect("kept"),
                map.new_label(w).expect("kept"),
            );
            if g.has_edge(v, w) {
                if g.degree(v) == 3 || g.degree(w) == 3 {
                    let child = self.product_rules(&rest)?;
                    let value = &child.value * 3u32;
                    return Ok(Some(Trace::new(
                        g,
                        Rule::Triangle { vertex: x },
                        value,
                        vec![child],
                    )));
                }
            } else if g.degree(v) == 2 || g.degree(w) == 2 {
                let h = rest.add_edge((v2, w2))?;
                if h.is_two_connected() {
                    let with_edge = self.product_rules(&h)?;
                    let without = self.product_rules(&rest)?;
                    let value = &with_edge.value * 2u32 + &without.value;
                    let rule = Rule::Subdivision { vertex: x };
                    return Ok(Some(Trace::new(g, rule, value, vec![with_edge, without])));
                }
            }
        }
        Ok(None)
    }

    fn enumeration(&self, g: &Graph) -> Result<Trace> {
        let value = self.enumerator.count(g)?;
        Ok(Trace::new(g, Rule::Enumeration, value, vec![]))
    }
}

fn product(g: &Graph, rule: Rule, children: Vec<Trace>) -> Trace {
    let value = children
        .iter()
        .fold(BigUint::one(), |acc, c| acc * &c.value);
    Trace::new(g, rule, value, children)
}

/// Recognizes the closed-form families on a single vertex, single edge or
/// 2-connected graph.
pub fn closed_form(g: &Graph) -> Option<ClosedForm> {
    let n = g.n();
    let m = g.edge_count();
    match (n, m) {
        (1, 0) => return Some(ClosedForm::Vertex),
        (2, 1) => return Some(ClosedForm::Edge),
        _ if n < 3 => return None,
        _ => {}
    }
    let degs = g.degrees();
    if m == n && degs.iter().all(|&d| d == 2) && g.is_connected() {
        return Some(ClosedForm::Cycle { n });
    }
    let full = n * (n - 1) / 2;
    if m == full {
        return Some(ClosedForm::Complete { n });
    }
    let k = full - m;
    if degs.iter().all(|&d| d + 2 >= n) && 2 * k <= n {
        return Some(ClosedForm::CompleteMinusMatching { n, k });
    }
    if n >= 4 {
        let hubs: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == n - 2).collect();
        let is_k2m = m == 2 * (n - 2)
            && hubs.len() >= 2
            && hubs.iter().any(|&a| {
                hubs.iter().any(|&b| {
                    a < b
                        && !g.has_edge(a, b)
                        && g.vertices()
                            .filter(|&v| v != a && v != b)
                            .all(|v| g.neighbors(v) == [a.min(b), a.max(b)])
                })
            });
        if is_k2m {
            return Some(ClosedForm::K2m { n });
        }
    }
    None
}

/// Evaluates with a fresh default planner.
pub fn nvol(g: &Graph, strategy: Strategy) -> Result<VolumeResult> {
    Planner::default().nvol(g, strategy)
}
