//! Generators for the named graph families, with documented labelings.
//!
//! * `path(n)`: vertices `0..n` in order.
//! * `cycle(n)`: `i ~ i+1 mod n`.
//! * `star(n)`: center `0`, leaves `1..n`.
//! * `gnk(n, k)`: clique on `0..n-k`, then the pendant paths in clique
//!   order, each listed from the clique outward.
//! * `ank(n, k)`: center `0`, leaves `1..=n-k`, pendant edges hanging from
//!   leaves `1..k`.
//! * `gpsq`: see [`PendantPathGraph`].

mod spec_text;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use spec_text::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    OutOfRange { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn out_of_range(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::OutOfRange { family, reason: reason.into() }
}

/// The connected graphs with adjacency spectral radius at most 2, apart
/// from paths and cycles. `H1`–`H4` have radius below 2, `H5`–`H8` exactly 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmithId {
    /// T(1,1,m): a path with a fork at one end, n = m + 3 ≥ 4.
    H1,
    /// T(1,2,2)
    H2,
    /// T(1,2,3)
    H3,
    /// T(1,2,4)
    H4,
    /// Double fork: a path with two pendant vertices at each end, n ≥ 5
    /// (n = 5 is K_{1,4}).
    H5,
    /// T(2,2,2)
    H6,
    /// T(1,3,3)
    H7,
    /// T(1,2,5)
    H8,
}

impl SmithId {
    pub const ALL: [SmithId; 8] = [
        SmithId::H1,
        SmithId::H2,
        SmithId::H3,
        SmithId::H4,
        SmithId::H5,
        SmithId::H6,
        SmithId::H7,
        SmithId::H8,
    ];

    /// Whether the adjacency spectral radius is exactly 2 (otherwise below 2).
    pub fn radius_is_two(self) -> bool {
        matches!(self, SmithId::H5 | SmithId::H6 | SmithId::H7 | SmithId::H8)
    }

    /// Families parameterized by vertex count.
    pub fn is_infinite(self) -> bool {
        matches!(self, SmithId::H1 | SmithId::H5)
    }

    /// Vertex count of the fixed-size members, or the smallest member.
    pub fn min_size(self) -> usize {
        match self {
            SmithId::H1 => 4,
            SmithId::H2 => 6,
            SmithId::H3 | SmithId::H6 => 7,
            SmithId::H4 | SmithId::H7 => 8,
            SmithId::H5 => 5,
            SmithId::H8 => 9,
        }
    }

    /// Sizes of the members with at most `max_n` vertices.
    pub fn sizes_up_to(self, max_n: usize) -> Vec<usize> {
        if self.is_infinite() {
            (self.min_size()..=max_n).collect()
        } else if self.min_size() <= max_n {
            vec![self.min_size()]
        } else {
            Vec::new()
        }
    }

    pub fn name(self) -> &'static str {
        ["H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8"][self as usize]
    }
}

/// Host graph for the pendant-path construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Core {
    Cycle(usize),
    Complete(usize),
}

impl Core {
    pub fn graph(self) -> Result<Graph, FamilyError> {
        match self {
            Core::Cycle(c) => cycle(c),
            Core::Complete(c) => complete(c),
        }
    }
}

/// Declarative description of a family member; see the `spec_text` module
/// for the text form (`gnk:8,5`, `smith:H6`, `gpsq:cycle4,p=3,s=1,q=1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Smith(SmithId, usize),
    Spider(usize, usize, usize),
    Gpsq { core: Core, p: usize, s: usize, q: usize },
    Gnk { n: usize, k: usize },
    Ank { n: usize, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Smith(id, size) => smith(id, size),
            FamilySpec::Spider(a, b, c) => spider(&[a, b, c]),
            FamilySpec::Gpsq { core, p, s, q } => Ok(gpsq(core, p, s, q)?.graph),
            FamilySpec::Gnk { n, k } => gnk(n, k),
            FamilySpec::Ank { n, k } => ank(n, k),
        }
    }
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("path", "n must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(out_of_range("cycle", "n must be at least 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("star", "n must be at least 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(out_of_range("complete", "n must be at least 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(Graph::new(n, &edges)?)
}

/// `make_basic` over the four elementary kinds.
pub fn make_basic(spec: FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Path(_) | FamilySpec::Cycle(_) | FamilySpec::Star(_) | FamilySpec::Complete(_) => {
            spec.build()
        }
        _ => Err(out_of_range("basic", "expected path, cycle, star or complete")),
    }
}

/// Center `0` with legs of the given lengths, attached in order.
pub fn spider(legs: &[usize]) -> Result<Graph, FamilyError> {
    legs.iter().try_fold(Graph::empty(1), |g, &len| Ok(g.attach_path(0, len)?))
}

/// Member of a Smith family. `size` is the vertex count for `H1` and `H5`
/// and is ignored for the fixed-size members.
pub fn smith(id: SmithId, size: usize) -> Result<Graph, FamilyError> {
    match id {
        SmithId::H1 => {
            if size < 4 {
                return Err(out_of_range("smith", "H1 = T(1,1,m) needs at least 4 vertices"));
            }
            spider(&[1, 1, size - 3])
        }
        SmithId::H2 => spider(&[1, 2, 2]),
        SmithId::H3 => spider(&[1, 2, 3]),
        SmithId::H4 => spider(&[1, 2, 4]),
        SmithId::H5 => {
            if size < 5 {
                return Err(out_of_range("smith", "H5 double fork needs at least 5 vertices"));
            }
            // spine 0..size-4, two leaves on each end of the spine
            let spine = size - 4;
            let mut g = path(spine)?;
            for end in [0, spine - 1] {
                g = g.attach_path(end, 1)?.attach_path(end, 1)?;
            }
            Ok(g)
        }
        SmithId::H6 => spider(&[2, 2, 2]),
        SmithId::H7 => spider(&[1, 3, 3]),
        SmithId::H8 => spider(&[1, 2, 5]),
    }
}

/// `G_{p,s,q}(u,v)` with labeled roles.
///
/// Labeling: the core vertices come first (`v = 0`, and `u = 1` when
/// `s ≥ 1`), then the `s − 1` interior vertices `w_1..w_{s−1}` of the
/// internal path, then the path at `u` from `u_p` (next to `u`) out to the
/// leaf `u_1`, then the path at `v` from `v_q` out to `v_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantPathGraph {
    pub graph: Graph,
    pub core: Core,
    pub u: usize,
    pub v: usize,
    pub p: usize,
    pub s: usize,
    pub q: usize,
    /// `u_1..u_p`, leaf first.
    pub u_path: Vec<usize>,
    /// `v_1..v_q`, leaf first.
    pub v_path: Vec<usize>,
    /// `w_0 = v, w_1, .., w_s = u`.
    pub w_path: Vec<usize>,
}

impl PendantPathGraph {
    /// Checks the structural invariants of the roles against the graph.
    pub fn validate(&self) -> Result<(), String> {
        let g = &self.graph;
        let deg = |x: usize| g.neighbors(x).len();
        if self.u_path.len() != self.p || self.v_path.len() != self.q {
            return Err("path lengths disagree with p, q".into());
        }
        if self.w_path.len() != self.s + 1
            || self.w_path[0] != self.v
            || self.w_path[self.s] != self.u
        {
            return Err("w path must run from v to u with s edges".into());
        }
        if (self.s == 0) != (self.u == self.v) {
            return Err("s = 0 exactly when u = v".into());
        }
        for pair in self.w_path.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(format!("w path edge {}-{} missing", pair[0], pair[1]));
            }
        }
        for &w in &self.w_path[1..self.s.max(1)] {
            if self.s > 1 && deg(w) != 2 {
                return Err(format!("interior vertex {w} has degree {}", deg(w)));
            }
        }
        for (anchor, list) in [(self.u, &self.u_path), (self.v, &self.v_path)] {
            let mut chain: Vec<usize> = list.clone();
            chain.push(anchor);
            for pair in chain.windows(2) {
                if !g.has_edge(pair[0], pair[1]) {
                    return Err(format!("pendant edge {}-{} missing", pair[0], pair[1]));
                }
            }
            if let Some(&leaf) = list.first() {
                if deg(leaf) != 1 {
                    return Err(format!("leaf {leaf} has degree {}", deg(leaf)));
                }
            }
            for &x in list.iter().skip(1) {
                if deg(x) != 2 {
                    return Err(format!("path vertex {x} has degree {}", deg(x)));
                }
            }
        }
        let host_deg = |x: usize| {
            let mut d = deg(x);
            if x == self.u && self.p > 0 {
                d -= 1;
            }
            if x == self.v && self.q > 0 {
                d -= 1;
            }
            d
        };
        if host_deg(self.u) < 2 || host_deg(self.v) < 2 {
            return Err("u and v need degree at least 2 in the host".into());
        }
        Ok(())
    }

    /// The same construction with `p − 1` and `q + 1`.
    pub fn shifted_target(&self) -> Result<PendantPathGraph, FamilyError> {
        if self.p == 0 {
            return Err(out_of_range("gpsq", "p must be positive to shift"));
        }
        gpsq(self.core, self.p - 1, self.s, self.q + 1)
    }
}

/// Builds `G_{p,s,q}(u,v)` over a cycle or complete core.
///
/// For `s = 0`, `u = v = 0`. For `s = 1`, `v = 0` and `u = 1` are adjacent
/// core vertices. For `s ≥ 2` a cycle core has its edge `01` subdivided
/// `s − 1` times; a complete core loses the edge `01` and gains a new
/// `0`–`1` path with `s − 1` interior vertices.
pub fn gpsq(core: Core, p: usize, s: usize, q: usize) -> Result<PendantPathGraph, FamilyError> {
    let c = match core {
        Core::Cycle(c) | Core::Complete(c) => c,
    };
    if c < 3 {
        return Err(out_of_range("gpsq", "core needs at least 3 vertices so d(u), d(v) >= 2"));
    }
    let mut host = core.graph()?;
    let (v, u) = if s == 0 { (0, 0) } else { (0, 1) };
    let mut w_path = vec![v];
    if s >= 2 {
        let start = host.n();
        host = host.without_edge(0, 1)?.attach_path(0, s - 1)?.with_edge(start + s - 2, 1)?;
        w_path.extend(start..start + s - 1);
    }
    if s >= 1 {
        w_path.push(u);
    }
    let before_u = host.n();
    host = host.attach_path(u, p)?;
    let before_v = host.n();
    host = host.attach_path(v, q)?;
    let pp = PendantPathGraph {
        graph: host,
        core,
        u,
        v,
        p,
        s,
        q,
        u_path: (before_u..before_v).rev().collect(),
        v_path: (before_v..before_v + q).rev().collect(),
        w_path,
    };
    pp.validate().map_err(|reason| out_of_range("gpsq", reason))?;
    Ok(pp)
}

/// `G_{p,q}(u,v)` over an arbitrary host: attach `P_p` at `u` and `P_q` at
/// `v`. No degree or adjacency conditions are imposed here.
pub fn attach_pendant_paths(
    host: &Graph,
    u: usize,
    v: usize,
    p: usize,
    q: usize,
) -> Result<Graph, FamilyError> {
    Ok(host.attach_path(u, p)?.attach_path(v, q)?)
}

/// Path lengths used by `gnk`: the first `k mod (n−k)` clique vertices get
/// `⌈k/(n−k)⌉`, the rest `⌊k/(n−k)⌋`.
pub fn gnk_path_lengths(n: usize, k: usize) -> Result<Vec<usize>, FamilyError> {
    if n < k + 2 {
        return Err(out_of_range("gnk", format!("need n - k >= 2, got n={n}, k={k}")));
    }
    let c = n - k;
    Ok((0..c).map(|i| k / c + usize::from(i < k % c)).collect())
}

/// `G_{n,k}`: `K_{n−k}` with pendant paths of almost equal lengths.
pub fn gnk(n: usize, k: usize) -> Result<Graph, FamilyError> {
    let lengths = gnk_path_lengths(n, k)?;
    let mut g = complete(n - k)?;
    for (i, &len) in lengths.iter().enumerate() {
        g = g.attach_path(i, len)?;
    }
    Ok(g)
}

/// `A(n,k)`: the star `S_{n−k+1}` with a pendant edge on `k − 1` leaves.
pub fn ank(n: usize, k: usize) -> Result<Graph, FamilyError> {
    if k == 0 || n < 2 * k {
        return Err(out_of_range("ank", format!("need n >= 2k >= 2, got n={n}, k={k}")));
    }
    let mut g = star(n - k + 1)?;
    for leaf in 1..k {
        g = g.attach_path(leaf, 1)?;
    }
    Ok(g)
}

/// Every Smith-classified connected graph on exactly `n` vertices: the
/// path, the cycle, and the `H1`–`H8` members of that size.
pub fn smith_members(n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    if n >= 1 {
        out.push((format!("P{n}"), path(n).expect("n >= 1")));
    }
    if n >= 3 {
        out.push((format!("C{n}"), cycle(n).expect("n >= 3")));
    }
    for id in SmithId::ALL {
        if id.sizes_up_to(n).contains(&n) {
            out.push((format!("{}({n})", id.name()), smith(id, n).expect("size in range")));
        }
    }
    out
}
