//! Bitmask brute force used as an independent oracle in integration tests.
//! Everything here is written from the definitions, without the library solvers.

#![allow(dead_code)]

use domchain::Graph;

pub struct Oracle {
    pub n: usize,
    /// Closed neighborhoods as bitmasks.
    pub closed: Vec<u32>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        assert!(g.n() <= 20, "oracle is for small graphs");
        let mut closed: Vec<u32> = (0..g.n()).map(|v| 1 << v).collect();
        for (u, v) in g.edges() {
            closed[u] |= 1 << v;
            closed[v] |= 1 << u;
        }
        Oracle { n: g.n(), closed }
    }

    fn full(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    fn members(s: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |v| s >> v & 1 == 1)
    }

    pub fn nbhd(&self, s: u32) -> u32 {
        Self::members(s).fold(0, |acc, v| acc | self.closed[v])
    }

    pub fn open(&self, s: u32) -> u32 {
        Self::members(s).fold(0, |acc, v| acc | (self.closed[v] & !(1 << v)))
    }

    pub fn independent(&self, s: u32) -> bool {
        Self::members(s).all(|v| self.closed[v] & s == 1 << v)
    }

    pub fn dominating(&self, s: u32) -> bool {
        self.nbhd(s) == self.full()
    }

    pub fn private(&self, v: usize, s: u32) -> u32 {
        self.closed[v] & !self.nbhd(s & !(1 << v))
    }

    pub fn irredundant(&self, s: u32) -> bool {
        Self::members(s).all(|v| self.private(v, s) != 0)
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.full()
    }

    pub fn alpha(&self) -> usize {
        self.subsets().filter(|&s| self.independent(s)).map(u32::count_ones).max().unwrap() as usize
    }

    pub fn alpha_sets(&self) -> Vec<u32> {
        let a = self.alpha() as u32;
        self.subsets().filter(|&s| s.count_ones() == a && self.independent(s)).collect()
    }

    fn min_max(&self, pred: impl Fn(u32) -> bool) -> (usize, usize) {
        let sizes: Vec<u32> = self.subsets().filter(|&s| pred(s)).map(u32::count_ones).collect();
        (*sizes.iter().min().unwrap() as usize, *sizes.iter().max().unwrap() as usize)
    }

    /// `(ir, γ, i, α, Γ, IR)` straight from the definitions.
    pub fn chain_without_grundy(&self) -> [usize; 6] {
        let maximal_irr = |s: u32| {
            self.irredundant(s) && (0..self.n).all(|v| s >> v & 1 == 1 || !self.irredundant(s | 1 << v))
        };
        let minimal_dom = |s: u32| {
            self.dominating(s) && Self::members(s).all(|v| !self.dominating(s & !(1 << v)))
        };
        let maximal_ind = |s: u32| self.independent(s) && self.dominating(s);
        let (ir, upper_ir) = self.min_max(maximal_irr);
        let (gamma, upper_gamma) = self.min_max(minimal_dom);
        let (i, alpha) = self.min_max(maximal_ind);
        [ir, gamma, i, alpha, upper_gamma, upper_ir]
    }

    pub fn upper_gamma(&self) -> usize {
        self.chain_without_grundy()[4]
    }

    /// Longest legal sequence: the best continuation only depends on the set
    /// of dominated vertices.
    pub fn grundy(&self) -> usize {
        let mut memo = vec![u8::MAX; 1 << self.n];
        self.grundy_from(0, &mut memo)
    }

    fn grundy_from(&self, dominated: u32, memo: &mut [u8]) -> usize {
        if memo[dominated as usize] != u8::MAX {
            return memo[dominated as usize] as usize;
        }
        let mut best = 0;
        for v in 0..self.n {
            if self.closed[v] & !dominated != 0 {
                best = best.max(1 + self.grundy_from(dominated | self.closed[v], memo));
            }
        }
        memo[dominated as usize] = best as u8;
        best
    }

    pub fn twin_free(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.closed[u] != self.closed[v]))
    }

    pub fn connected(&self) -> bool {
        let mut seen = 1u32;
        loop {
            let next = self.nbhd(seen);
            if next == seen {
                return seen == self.full();
            }
            seen = next;
        }
    }

    pub fn bipartite(&self) -> bool {
        // A graph is bipartite iff some set S makes every edge cross S.
        self.subsets().any(|s| {
            (0..self.n).all(|u| {
                let nb = self.closed[u] & !(1 << u);
                if s >> u & 1 == 1 { nb & s == 0 } else { nb & !s == 0 }
            })
        })
    }

    /// Membership in F (connected, twin-free except K_1/K_2, Γ = γ_gr) and F_α.
    pub fn classes(&self) -> (bool, bool) {
        let gr = self.grundy();
        let f = self.connected() && (self.n <= 2 || self.twin_free()) && self.upper_gamma() == gr;
        (f, f && self.alpha() == gr)
    }
}

/// Every labeled connected graph on 1..=max_n vertices, written independently
/// of the library enumerator.
pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if Oracle::new(&g).connected() {
                out.push(g);
            }
        }
    }
    out
}
