//! Two-terminal series and parallel compositions.

use std::collections::BTreeSet;

use super::{Edge, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpKind {
    Series,
    Parallel,
}

/// A graph with a designated source and sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTerminal {
    pub graph: Graph,
    pub source: usize,
    pub sink: usize,
}

impl TwoTerminal {
    pub fn new(graph: Graph, source: usize, sink: usize) -> Result<Self> {
        for t in [source, sink] {
            if t == 0 || t > graph.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: t,
                    n: graph.n(),
                });
            }
        }
        if source == sink {
            return Err(Error::Hypothesis("source and sink must differ".into()));
        }
        Ok(TwoTerminal {
            graph,
            source,
            sink,
        })
    }

    /// A single edge `1–2` with source 1 and sink 2.
    pub fn edge() -> Self {
        TwoTerminal {
            graph: Graph::from_edge_set(2, [Edge::new(1, 2)]),
            source: 1,
            sink: 2,
        }
    }

    pub fn compose(kind: SpKind, g: &TwoTerminal, h: &TwoTerminal) -> Result<TwoTerminal> {
        for t in [g, h] {
            TwoTerminal::new(t.graph.clone(), t.source, t.sink)?;
        }
        match kind {
            SpKind::Series => {
                let (mut t, label) = Self::glue(g, h, &[(h.source, g.sink)]);
                t.sink = label[h.sink];
                Ok(t)
            }
            SpKind::Parallel => Ok(Self::glue(g, h, &[(h.source, g.source), (h.sink, g.sink)]).0),
        }
    }

    pub fn series(&self, h: &TwoTerminal) -> Result<TwoTerminal> {
        Self::compose(SpKind::Series, self, h)
    }

    pub fn parallel(&self, h: &TwoTerminal) -> Result<TwoTerminal> {
        Self::compose(SpKind::Parallel, self, h)
    }

    /// Keeps `g`'s labels, maps `h`'s identified vertices onto `g`, and
    /// numbers the rest of `h` after `g`. Parallel duplicates collapse.
    /// Terminals are `g`'s; also returns `h`'s relabeling.
    fn glue(
        g: &TwoTerminal,
        h: &TwoTerminal,
        identify: &[(usize, usize)],
    ) -> (TwoTerminal, Vec<usize>) {
        let mut label = vec![0usize; h.graph.n() + 1];
        for &(hv, gv) in identify {
            label[hv] = gv;
        }
        let mut next = g.graph.n();
        for v in h.graph.vertices() {
            if label[v] == 0 {
                next += 1;
                label[v] = next;
            }
        }
        let edges: BTreeSet<Edge> = g
            .graph
            .edges()
            .chain(
                h.graph
                    .edges()
                    .map(|e| Edge::new(label[e.u()], label[e.v()])),
            )
            .collect();
        let t = TwoTerminal {
            graph: Graph::from_edge_set(next, edges),
            source: g.source,
            sink: g.sink,
        };
        (t, label)
    }
}
