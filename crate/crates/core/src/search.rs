//! Search for large orthogonal exponential families in the ball: sets whose
//! pairwise distances all lie on Bessel-root radii. Candidates are collinear
//! root-radius sums and root-radius triangle vertices; maximal families are
//! found by depth-first chain extension or branch-and-bound clique search.
//! All budgets are node counts, so results are deterministic.

use crate::domains::{zero_set, Domain, ZeroSetDescription};
use crate::error::{Error, Result};
use crate::points::{norm, sub, PointSet};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    Chain,
    Clique,
}

impl std::fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SearchStrategy::Chain => write!(f, "chain"),
            SearchStrategy::Clique => write!(f, "clique"),
        }
    }
}

impl std::str::FromStr for SearchStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(SearchStrategy::Chain),
            "clique" => Ok(SearchStrategy::Clique),
            _ => Err(Error::InvalidArgument(format!(
                "unknown strategy {s:?} (expected chain or clique)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IncumbentEvent {
    pub size: usize,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchLog {
    pub strategy: String,
    pub budget: u64,
    pub nodes_expanded: u64,
    pub truncated: bool,
    pub incumbent_history: Vec<IncumbentEvent>,
}

impl SearchLog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("log serialization cannot fail")
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub points: PointSet,
    pub log: SearchLog,
}

/// Finite graph on candidate frequencies; edges exactly where the pair
/// difference lies in the zero set. Orthogonal families are cliques.
#[derive(Debug, Clone)]
pub struct OrthogonalityGraph {
    points: PointSet,
    adjacency: Vec<Vec<bool>>,
    tol: f64,
}

impl OrthogonalityGraph {
    /// Build edges from zero-set membership of pairwise differences.
    pub fn from_candidates(
        points: PointSet,
        zs: &ZeroSetDescription,
        tol: f64,
    ) -> Result<Self> {
        let pts = points.float_points();
        let n = pts.len();
        let mut adjacency = vec![vec![false; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let diff = sub(&pts[i], &pts[j]);
                let dist = norm(&diff);
                let hit = zs.contains(&diff, tol * dist.max(1.0))?;
                adjacency[i][j] = hit;
                adjacency[j][i] = hit;
            }
        }
        Ok(OrthogonalityGraph {
            points,
            adjacency,
            tol,
        })
    }

    /// Wrap an arbitrary symmetric irreflexive relation (used for solver
    /// cross-checks; such graphs need not respect the root-radius invariant).
    pub fn from_adjacency(points: PointSet, adjacency: Vec<Vec<bool>>, tol: f64) -> Result<Self> {
        let n = points.len();
        if adjacency.len() != n || adjacency.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(
                "adjacency matrix shape must match the point count".into(),
            ));
        }
        for i in 0..n {
            if adjacency[i][i] {
                return Err(Error::InvalidArgument("edge relation must be irreflexive".into()));
            }
            for j in 0..n {
                if adjacency[i][j] != adjacency[j][i] {
                    return Err(Error::InvalidArgument("edge relation must be symmetric".into()));
                }
            }
        }
        Ok(OrthogonalityGraph {
            points,
            adjacency,
            tol,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }
}

/// Largest chain {0 = t_0 < t_1 < ... <= R} on a line such that every
/// difference t_j - t_i sits on a root radius (each pair checked directly
/// against the enumerated radii, never by transitivity).
pub fn longest_collinear_chain(
    d: usize,
    big_r: f64,
    tol: f64,
    budget: u64,
) -> Result<SearchResult> {
    if !(big_r > 0.0 && tol > 0.0) {
        return Err(Error::InvalidArgument(
            "chain search needs R > 0 and tol > 0".into(),
        ));
    }
    let zs = zero_set(Domain::ball(d)?, 2.0 * big_r)?;
    let radii: Vec<f64> = zs.root_radii().unwrap_or(&[]).to_vec();

    struct Ctx<'a> {
        radii: &'a [f64],
        tol: f64,
        big_r: f64,
        budget: u64,
        nodes: u64,
        truncated: bool,
        best: Vec<f64>,
        history: Vec<IncumbentEvent>,
    }

    impl Ctx<'_> {
        fn on_root(&self, x: f64) -> bool {
            let idx = self
                .radii
                .partition_point(|r| *r < x);
            let tol_eff = self.tol * x.max(1.0);
            for k in [idx.wrapping_sub(1), idx] {
                if let Some(r) = self.radii.get(k) {
                    if (r - x).abs() <= tol_eff {
                        return true;
                    }
                }
            }
            false
        }

        fn dfs(&mut self, chain: &mut Vec<f64>) {
            if chain.len() > self.best.len() {
                self.best = chain.clone();
                self.history.push(IncumbentEvent {
                    size: chain.len(),
                    nodes: self.nodes,
                });
            }
            let last = *chain.last().unwrap();
            for k in 0..self.radii.len() {
                let t = last + self.radii[k];
                if t > self.big_r + self.tol {
                    break;
                }
                if self.nodes >= self.budget {
                    self.truncated = true;
                    return;
                }
                self.nodes += 1;
                if chain.iter().all(|&s| self.on_root(t - s)) {
                    chain.push(t);
                    self.dfs(chain);
                    chain.pop();
                    if self.truncated {
                        return;
                    }
                }
            }
        }
    }

    let mut ctx = Ctx {
        radii: &radii,
        tol,
        big_r,
        budget,
        nodes: 0,
        truncated: false,
        best: vec![0.0],
        history: vec![IncumbentEvent { size: 1, nodes: 0 }],
    };
    let mut chain = vec![0.0];
    ctx.dfs(&mut chain);

    let pts: Vec<Vec<f64>> = ctx
        .best
        .iter()
        .map(|&t| {
            let mut p = vec![0.0; d];
            p[0] = t;
            p
        })
        .collect();
    let points = PointSet::from_float(d, pts, format!("chain-d{d}-R{big_r}"))?;
    Ok(SearchResult {
        points,
        log: SearchLog {
            strategy: SearchStrategy::Chain.to_string(),
            budget,
            nodes_expanded: ctx.nodes,
            truncated: ctx.truncated,
            incumbent_history: ctx.history,
        },
    })
}

/// Branch-and-bound maximum clique. The incumbent is seeded greedily, so a
/// valid (possibly suboptimal) family survives budget exhaustion; ties break
/// toward the lexicographically smallest vertex set.
pub fn max_clique_search(graph: &OrthogonalityGraph, budget: u64) -> Result<SearchResult> {
    if graph.is_empty() {
        return Err(Error::InvalidArgument(
            "clique search needs at least one candidate vertex".into(),
        ));
    }
    let n = graph.len();

    // greedy seed in index order
    let mut greedy: Vec<usize> = Vec::new();
    for v in 0..n {
        if greedy.iter().all(|&u| graph.has_edge(u, v)) {
            greedy.push(v);
        }
    }

    struct Ctx<'a> {
        graph: &'a OrthogonalityGraph,
        budget: u64,
        nodes: u64,
        truncated: bool,
        best: Vec<usize>,
        history: Vec<IncumbentEvent>,
    }

    impl Ctx<'_> {
        fn expand(&mut self, current: &mut Vec<usize>, candidates: &[usize]) {
            if current.len() > self.best.len() {
                self.best = current.clone();
                self.history.push(IncumbentEvent {
                    size: current.len(),
                    nodes: self.nodes,
                });
            }
            if current.len() + candidates.len() <= self.best.len() {
                return;
            }
            for (pos, &v) in candidates.iter().enumerate() {
                if current.len() + (candidates.len() - pos) <= self.best.len() {
                    return;
                }
                if self.nodes >= self.budget {
                    self.truncated = true;
                    return;
                }
                self.nodes += 1;
                let next: Vec<usize> = candidates[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&u| self.graph.has_edge(u, v))
                    .collect();
                current.push(v);
                self.expand(current, &next);
                current.pop();
                if self.truncated {
                    return;
                }
            }
        }
    }

    let mut ctx = Ctx {
        graph,
        budget,
        nodes: 0,
        truncated: false,
        best: greedy.clone(),
        history: vec![IncumbentEvent {
            size: greedy.len(),
            nodes: 0,
        }],
    };
    let all: Vec<usize> = (0..n).collect();
    let mut current = Vec::new();
    ctx.expand(&mut current, &all);

    let pts = graph.points().float_points();
    let chosen: Vec<Vec<f64>> = ctx.best.iter().map(|&i| pts[i].clone()).collect();
    let points = PointSet::from_float(graph.points().dimension(), chosen, "clique")?;
    Ok(SearchResult {
        points,
        log: SearchLog {
            strategy: SearchStrategy::Clique.to_string(),
            budget,
            nodes_expanded: ctx.nodes,
            truncated: ctx.truncated,
            incumbent_history: ctx.history,
        },
    })
}

/// Candidate frequencies inside B(R) for the plane: the origin, points
/// (r_i, 0) on the axis, and apexes of triangles with two root-radius sides
/// over a root-radius base.
pub fn clique_candidates(d: usize, big_r: f64, tol: f64) -> Result<(PointSet, ZeroSetDescription)> {
    if d != 2 {
        return Err(Error::Unsupported(
            "clique candidate generation is implemented for d = 2".into(),
        ));
    }
    let zs = zero_set(Domain::ball(d)?, 2.0 * big_r)?;
    let radii: Vec<f64> = zs.root_radii().unwrap_or(&[]).to_vec();
    let mut pts: Vec<Vec<f64>> = vec![vec![0.0, 0.0]];
    for &r in &radii {
        if r <= big_r {
            pts.push(vec![r, 0.0]);
        }
    }
    let in_ball: Vec<f64> = radii.iter().copied().filter(|r| *r <= big_r).collect();
    'outer: for &base in &in_ball {
        for &ra in &in_ball {
            for &rb in &radii {
                // apex at distance ra from the origin, rb from (base, 0)
                let x = (base * base + ra * ra - rb * rb) / (2.0 * base);
                let y2 = ra * ra - x * x;
                if y2 <= tol {
                    continue;
                }
                let p = vec![x, y2.sqrt()];
                if norm(&p) <= big_r + tol
                    && !pts.iter().any(|q| crate::points::euclidean(q, &p) < 1e-9)
                {
                    pts.push(p);
                }
                if pts.len() >= 2000 {
                    break 'outer;
                }
            }
        }
    }
    let points = PointSet::from_float(2, pts, format!("candidates-R{big_r}"))?;
    Ok((points, zs))
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthRow {
    pub r: f64,
    pub size: usize,
    pub distinct_distances: usize,
    pub truncated: bool,
}

/// Best orthogonal-set size found per radius, with its distinct-distance
/// count; the counts stay within the linear root budget by construction.
pub fn growth_profile(
    d: usize,
    r_values: &[f64],
    strategy: SearchStrategy,
    budget: u64,
) -> Result<Vec<GrowthRow>> {
    if r_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("R values must be ascending".into()));
    }
    let tol = 1e-9;
    let mut rows = Vec::new();
    for &r in r_values {
        let result = run_search(d, r, strategy, tol, budget)?;
        let n = result.points.len();
        let distinct = if n >= 2 {
            crate::distances::distinct_distances(
                &result.points,
                crate::distances::DistanceMode::Clustered(tol),
            )?
            .distinct_count()
        } else {
            0
        };
        rows.push(GrowthRow {
            r,
            size: n,
            distinct_distances: distinct,
            truncated: result.log.truncated,
        });
    }
    Ok(rows)
}

/// Dispatch one search at radius R with the given strategy.
pub fn run_search(
    d: usize,
    big_r: f64,
    strategy: SearchStrategy,
    tol: f64,
    budget: u64,
) -> Result<SearchResult> {
    match strategy {
        SearchStrategy::Chain => longest_collinear_chain(d, big_r, tol, budget),
        SearchStrategy::Clique => {
            let (candidates, zs) = clique_candidates(d, big_r, tol)?;
            let graph = OrthogonalityGraph::from_candidates(candidates, &zs, tol)?;
            max_clique_search(&graph, budget)
        }
    }
}
