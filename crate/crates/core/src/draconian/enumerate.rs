//! Depth-first enumeration of `𝔇(G)` over the coordinates `a_1..a_n`.
//!
//! Every subset's neighborhood-union size is tabulated up front. At depth
//! `i` two families of constraints bound `a_i`:
//!
//! * upper: for every `S` inside the assigned prefix,
//!   `Σ_S a + a_i < |𝒩(S ∪ {i})|`;
//! * lower: with `R` units still to place after `a_i`, the untouched suffix
//!   `Q` must be able to take them, `Σ_S a + R < |𝒩(S ∪ Q)|`.
//!
//! Each subset's inequality is enforced exactly when its largest member is
//! assigned, so leaves are draconian; the lower bounds are necessary
//! conditions only and never discard a completable prefix.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::check::check_subset;
use super::sequence::{DraconianSequence, DraconianSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard ceiling on `n` for the subset tables (`2^n` bytes each).
pub const TABLE_MAX_N: usize = 28;

#[derive(Clone, Debug)]
pub struct Enumerator {
    /// Refuse graphs with more vertices than this.
    pub max_n: usize,
    /// Worker threads; `1` runs on the calling thread.
    pub workers: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            max_n: 22,
            workers: 1,
        }
    }
}

impl Enumerator {
    pub fn with_workers(workers: usize) -> Self {
        Enumerator {
            workers: workers.max(1),
            ..Self::default()
        }
    }

    fn guard(&self, g: &Graph) -> Result<()> {
        let cap = self.max_n.min(TABLE_MAX_N);
        if g.n() > cap {
            return Err(Error::TooLarge {
                what: "enumeration",
                n: g.n(),
                cap,
            });
        }
        Ok(())
    }

    /// All of `𝔇(G)` in lexicographic order.
    pub fn enumerate(&self, g: &Graph) -> Result<DraconianSet> {
        self.guard(g)?;
        if g.n() == 0 {
            return Ok(DraconianSet {
                graph: g.clone(),
                sequences: Vec::new(),
                count: BigUint::default(),
            });
        }
        let table = UnionTable::new(g);
        let shards = self.run(&table, |walker, out: &mut Vec<Vec<u8>>| {
            walker.collect(out);
        });
        let sequences: Vec<DraconianSequence> = shards
            .into_iter()
            .flatten()
            .map(|s| DraconianSequence(s.into_iter().map(u32::from).collect()))
            .collect();
        let count = BigUint::from(sequences.len());
        Ok(DraconianSet {
            graph: g.clone(),
            sequences,
            count,
        })
    }

    /// `|𝔇(G)|` without materializing the sequences.
    pub fn count(&self, g: &Graph) -> Result<BigUint> {
        self.guard(g)?;
        if g.n() == 0 {
            return Ok(BigUint::default());
        }
        let table = UnionTable::new(g);
        let shards = self.run(&table, |walker, out: &mut u64| {
            *out = walker.count();
        });
        Ok(shards.into_iter().map(BigUint::from).sum())
    }

    /// Splits on the values of `a_1` (and `a_2` when there are too few
    /// shards), runs each shard, and returns results in prefix order.
    fn run<T, F>(&self, table: &UnionTable, work: F) -> Vec<T>
    where
        T: Default + Send,
        F: Fn(&mut Walker, &mut T) + Sync,
    {
        let n = table.n;
        let run_one = |prefix: &Vec<u8>| {
            let mut w = Walker::new(table);
            let mut out = T::default();
            if w.descend_prefix(prefix) {
                work(&mut w, &mut out);
            }
            out
        };
        if self.workers <= 1 || n < 3 {
            return vec![run_one(&Vec::new())];
        }
        let mut prefixes = Walker::new(table).prefixes(1);
        if prefixes.len() < 2 * self.workers && n >= 4 {
            prefixes = Walker::new(table).prefixes(2);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .expect("thread pool");
        pool.install(|| prefixes.par_iter().map(run_one).collect())
    }
}

/// `|𝒩_{D(G)}(S)|` for every `S ⊆ [n]`, indexed by bitmask.
struct UnionTable {
    n: usize,
    union: Vec<u8>,
}

impl UnionTable {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let rows: Vec<u32> = g
            .vertices()
            .map(|v| {
                g.neighbors(v)
                    .iter()
                    .fold(1u32 << (v - 1), |m, &w| m | 1 << (w - 1))
            })
            .collect();
        // Split masks into low and high halves so only two small OR tables
        // are needed.
        let lo_bits = n / 2;
        let hi_bits = n - lo_bits;
        let or_table = |bits: usize, base: usize| -> Vec<u32> {
            let mut t = vec![0u32; 1 << bits];
            for s in 1..t.len() {
                let low = s.trailing_zeros() as usize;
                t[s] = t[s & (s - 1)] | rows[base + low];
            }
            t
        };
        let lo = or_table(lo_bits, 0);
        let hi = or_table(hi_bits, lo_bits);
        let mut union = vec![0u8; 1 << n];
        for (s, u) in union.iter_mut().enumerate() {
            *u = (lo[s & ((1 << lo_bits) - 1)] | hi[s >> lo_bits]).count_ones() as u8;
        }
        UnionTable { n, union }
    }
}

struct Walker<'a> {
    n: usize,
    full: usize,
    union: &'a [u8],
    // sums[S] = Σ_{i∈S} a_i for S within the assigned prefix
    sums: Vec<u8>,
    values: Vec<u8>,
    depth: usize,
    remaining: u32,
}

impl<'a> Walker<'a> {
    fn new(table: &'a UnionTable) -> Self {
        let n = table.n;
        Walker {
            n,
            full: (1usize << n) - 1,
            union: &table.union,
            sums: vec![0; 1 << n],
            values: Vec::with_capacity(n),
            depth: 0,
            remaining: (n - 1) as u32,
        }
    }

    /// Feasible range for the coordinate at the current depth.
    #[inline]
    fn bounds(&self) -> Option<(u32, u32)> {
        let i = self.depth;
        let bit = 1usize << i;
        let suffix = self.full & !((bit << 1) - 1);
        let rem = self.remaining as i64;
        let mut hi = rem;
        let mut lo = 0i64;
        for s in 0..bit {
            let sum = self.sums[s] as i64;
            hi = hi.min(self.union[s | bit] as i64 - 1 - sum);
            if suffix != 0 {
                lo = lo.max(sum + rem - self.union[s | suffix] as i64 + 1);
            }
        }
        if suffix == 0 {
            lo = rem;
        }
        (lo <= hi).then_some((lo as u32, hi as u32))
    }

    #[inline]
    fn push(&mut self, x: u32) {
        let bit = 1usize << self.depth;
        let x8 = x as u8;
        let (low, high) = self.sums.split_at_mut(bit);
        for (dst, &src) in high[..bit].iter_mut().zip(low.iter()) {
            *dst = src + x8;
        }
        self.values.push(x8);
        self.depth += 1;
        self.remaining -= x;
    }

    #[inline]
    fn pop(&mut self) {
        let x = self.values.pop().expect("nonempty prefix");
        self.depth -= 1;
        self.remaining += x as u32;
    }

    /// Follows a fixed prefix; false when it leaves the feasible region.
    fn descend_prefix(&mut self, prefix: &[u8]) -> bool {
        for &x in prefix {
            match self.bounds() {
                Some((lo, hi)) if (lo..=hi).contains(&(x as u32)) => self.push(x as u32),
                _ => return false,
            }
        }
        true
    }

    /// Feasible prefixes of length `len`, in lexicographic order.
    fn prefixes(&mut self, len: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        self.walk_prefixes(len, &mut out);
        out
    }

    fn walk_prefixes(&mut self, len: usize, out: &mut Vec<Vec<u8>>) {
        if self.depth == len {
            out.push(self.values.clone());
            return;
        }
        if let Some((lo, hi)) = self.bounds() {
            for x in lo..=hi {
                self.push(x);
                self.walk_prefixes(len, out);
                self.pop();
            }
        }
    }

    fn collect(&mut self, out: &mut Vec<Vec<u8>>) {
        if self.depth == self.n {
            out.push(self.values.clone());
            return;
        }
        if let Some((lo, hi)) = self.bounds() {
            for x in lo..=hi {
                self.push(x);
                self.collect(out);
                self.pop();
            }
        }
    }

    fn count(&mut self) -> u64 {
        if self.depth == self.n {
            return 1;
        }
        let Some((lo, hi)) = self.bounds() else {
            return 0;
        };
        // At the second-to-last coordinate every value in range completes:
        // the last coordinate's constraints are this depth's lower bounds.
        if self.depth + 2 == self.n {
            return (hi - lo + 1) as u64;
        }
        let mut total = 0;
        for x in lo..=hi {
            self.push(x);
            total += self.count();
            self.pop();
        }
        total
    }
}

/// Oracle: every weak composition of `n − 1` into `n` parts, filtered by
/// the all-subsets checker. Exponential; meant for small `n`.
pub fn brute_force_enumerate(g: &Graph) -> Result<Vec<DraconianSequence>> {
    let n = g.n();
    if n > 12 {
        return Err(Error::TooLarge {
            what: "brute-force enumeration",
            n,
            cap: 12,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = g.double();
    let mut out = Vec::new();
    let mut a = vec![0u32; n];
    fn rec(
        i: usize,
        rem: u32,
        a: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]) -> Result<()>,
    ) -> Result<()> {
        if i + 1 == a.len() {
            a[i] = rem;
            return f(a);
        }
        for x in 0..=rem {
            a[i] = x;
            rec(i + 1, rem - x, a, f)?;
        }
        Ok(())
    }
    rec(0, (n - 1) as u32, &mut a, &mut |a| {
        if check_subset(&d, a)? {
            out.push(DraconianSequence(a.to_vec()));
        }
        Ok(())
    })?;
    Ok(out)
}

pub fn enumerate(g: &Graph) -> Result<DraconianSet> {
    Enumerator::default().enumerate(g)
}

pub fn count(g: &Graph, workers: usize) -> Result<BigUint> {
    Enumerator::with_workers(workers).count(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Blocks, Family};

    fn seqs(v: &[&[u32]]) -> Vec<DraconianSequence> {
        let mut out: Vec<_> = v.iter().map(|s| DraconianSequence(s.to_vec())).collect();
        out.sort();
        out
    }

    #[test]
    fn star_example() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (2, 4)]).unwrap();
        let set = enumerate(&g).unwrap();
        let expected = seqs(&[
            &[0, 3, 0, 0],
            &[0, 2, 0, 1],
            &[1, 1, 1, 0],
            &[1, 1, 0, 1],
            &[1, 0, 1, 1],
            &[0, 1, 1, 1],
            &[0, 2, 1, 0],
            &[1, 2, 0, 0],
        ]);
        assert_eq!(set.sequences, expected);
        assert_eq!(set.count, BigUint::from(8u32));
    }

    #[test]
    fn triangle_example() {
        let set = enumerate(&Family::Cycle(3).build().unwrap()).unwrap();
        let expected = seqs(&[
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ]);
        assert_eq!(set.sequences, expected);
    }

    #[test]
    fn disconnected_is_empty() {
        let g = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(enumerate(&g).unwrap().sequences.is_empty());
        assert_eq!(count(&g, 1).unwrap(), BigUint::default());
    }

    #[test]
    fn small_counts() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(count(&k4, 1).unwrap(), BigUint::from(20u32));
        assert_eq!(
            count(&Family::Cycle(4).build().unwrap(), 1).unwrap(),
            BigUint::from(16u32)
        );
        assert_eq!(count(&Graph::empty(1), 1).unwrap(), BigUint::from(1u32));
        let k2 = Family::Path(2).build().unwrap();
        assert_eq!(enumerate(&k2).unwrap().sequences, seqs(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn matches_brute_force() {
        let mut graphs = vec![
            Family::Wheel(5).build().unwrap(),
            Family::CompleteBipartite(2, 4).build().unwrap(),
            Family::CompleteMinusMatching(6, 2).build().unwrap(),
        ];
        for seed in 0..10 {
            graphs.push(Family::RandomOuterplanar { n: 7, seed }.build().unwrap());
            graphs.push(Family::RandomTree { n: 7, seed }.build().unwrap());
        }
        for g in &graphs {
            let fast = enumerate(g).unwrap();
            assert_eq!(fast.sequences, brute_force_enumerate(g).unwrap(), "{g}");
            assert_eq!(count(g, 1).unwrap(), fast.count);
            assert_eq!(count(g, 3).unwrap(), fast.count);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = Enumerator {
            max_n: 5,
            workers: 1,
        };
        let err = e.count(&Family::Cycle(6).build().unwrap()).unwrap_err();
        assert!(err.is_resource_cap());
    }

    #[test]
    fn sharded_listing_is_identical() {
        let g = Family::Wheel(6).build().unwrap();
        let one = Enumerator::with_workers(1).enumerate(&g).unwrap();
        for w in [2, 8] {
            assert_eq!(
                Enumerator::with_workers(w).enumerate(&g).unwrap().to_text(),
                one.to_text()
            );
        }
    }
}
