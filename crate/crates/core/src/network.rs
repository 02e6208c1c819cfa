//! Airport-network experiment: holding combined cost constant, trade edges
//! (modeling cost, measured as total edge length) against fuel price
//! (operation cost), starting from the minimum spanning tree and watching
//! the average shortest path respond.

use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::cost::CostCombiner;
use crate::error::{Error, Result};

pub const EARTH_RADIUS_KM: f64 = 6371.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: String,
    /// (latitude, longitude) in degrees when known.
    pub coords: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight_km: f64,
}

/// Undirected weighted graph with string node ids. No self-loops, no
/// duplicate edges, strictly positive finite weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    nodes: Vec<Node>,
    edges: Vec<Edge>,
}

/// Great-circle distance between two (latitude, longitude) points.
pub fn haversine_weight(a: (f64, f64), b: (f64, f64)) -> Result<f64> {
    for &(lat, lon) in [&a, &b] {
        if !((-90.0..=90.0).contains(&lat) && (-180.0..=180.0).contains(&lon)) {
            return Err(Error::domain(format!(
                "coordinates ({lat}, {lon}) outside latitude [-90, 90] / longitude [-180, 180]"
            )));
        }
    }
    let (lat1, lon1) = (a.0.to_radians(), a.1.to_radians());
    let (lat2, lon2) = (b.0.to_radians(), b.1.to_radians());
    let dlat = lat2 - lat1;
    let dlon = lon2 - lon1;
    let h = (dlat / 2.0).sin().powi(2) + lat1.cos() * lat2.cos() * (dlon / 2.0).sin().powi(2);
    Ok(2.0 * EARTH_RADIUS_KM * h.sqrt().min(1.0).asin())
}

impl WeightedGraph {
    pub fn from_parts(nodes: Vec<Node>, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::config("graph needs at least one node"));
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v, weight_km) in edges {
            if u >= nodes.len() || v >= nodes.len() {
                return Err(Error::config(format!(
                    "edge ({u}, {v}) references a missing node"
                )));
            }
            if u == v {
                return Err(Error::config(format!("self-loop at node {:?}", nodes[u].id)));
            }
            if !(weight_km > 0.0 && weight_km.is_finite()) {
                return Err(Error::config(format!(
                    "edge {:?}-{:?} has invalid weight {weight_km}",
                    nodes[u].id, nodes[v].id
                )));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::config(format!(
                    "duplicate edge {:?}-{:?}",
                    nodes[u].id, nodes[v].id
                )));
            }
            normalized.push(Edge {
                u: key.0,
                v: key.1,
                weight_km,
            });
        }
        Ok(WeightedGraph {
            nodes,
            edges: normalized,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Connected-component sizes, largest first.
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut dsu = DisjointSet::new(self.nodes.len());
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        let mut counts = std::collections::BTreeMap::new();
        for i in 0..self.nodes.len() {
            *counts.entry(dsu.find(i)).or_insert(0usize) += 1;
        }
        let mut sizes: Vec<usize> = counts.into_values().collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    pub fn ensure_connected(&self) -> Result<()> {
        let sizes = self.component_sizes();
        if sizes.len() > 1 {
            Err(Error::Disconnected { components: sizes })
        } else {
            Ok(())
        }
    }
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Deterministic candidate order: ascending weight, ties broken by the
/// lexicographically smaller (then larger) endpoint id.
fn edge_sort_key(g: &WeightedGraph, index: usize) -> (f64, &str, &str) {
    let e = &g.edges()[index];
    let (a, b) = (g.nodes()[e.u].id.as_str(), g.nodes()[e.v].id.as_str());
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    (e.weight_km, lo, hi)
}

fn sorted_edge_indices(g: &WeightedGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by(|&i, &j| {
        let (wa, la, ha) = edge_sort_key(g, i);
        let (wb, lb, hb) = edge_sort_key(g, j);
        wa.total_cmp(&wb).then_with(|| la.cmp(lb)).then_with(|| ha.cmp(hb))
    });
    order
}

/// Kruskal's minimum spanning tree; returns indices into `g.edges()`.
pub fn minimum_spanning_tree(g: &WeightedGraph) -> Result<Vec<usize>> {
    g.ensure_connected()?;
    let mut dsu = DisjointSet::new(g.node_count());
    let mut tree = Vec::with_capacity(g.node_count().saturating_sub(1));
    for index in sorted_edge_indices(g) {
        let e = g.edges()[index];
        if dsu.union(e.u, e.v) {
            tree.push(index);
            if tree.len() + 1 == g.node_count() {
                break;
            }
        }
    }
    Ok(tree)
}

#[derive(Clone, Copy, PartialEq)]
struct HeapEntry {
    dist: f64,
    node: usize,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // reversed for a min-heap
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        node: source,
    });
    while let Some(HeapEntry { dist: d, node }) = heap.pop() {
        if d > dist[node] {
            continue;
        }
        for &(next, w) in &adj[node] {
            let nd = d + w;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(HeapEntry {
                    dist: nd,
                    node: next,
                });
            }
        }
    }
    dist
}

fn adjacency(g: &WeightedGraph, edge_indices: &[usize]) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); g.node_count()];
    for &i in edge_indices {
        let e = g.edges()[i];
        adj[e.u].push((e.v, e.weight_km));
        adj[e.v].push((e.u, e.weight_km));
    }
    adj
}

/// Mean weighted shortest-path length over all unordered node pairs of the
/// subgraph induced by `edge_indices`.
pub fn average_shortest_path_over(g: &WeightedGraph, edge_indices: &[usize]) -> Result<f64> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::domain("average shortest path needs at least 2 nodes"));
    }
    let adj = adjacency(g, edge_indices);
    let mut sum = 0.0;
    for source in 0..n {
        let dist = dijkstra(&adj, source);
        for &d in dist.iter().skip(source + 1) {
            if !d.is_finite() {
                let sub = WeightedGraph {
                    nodes: g.nodes.clone(),
                    edges: edge_indices.iter().map(|&i| g.edges[i]).collect(),
                };
                return Err(Error::Disconnected {
                    components: sub.component_sizes(),
                });
            }
            sum += d;
        }
    }
    Ok(sum / (n * (n - 1) / 2) as f64)
}

/// Mean weighted shortest-path length of the whole graph.
pub fn average_shortest_path(g: &WeightedGraph) -> Result<f64> {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    average_shortest_path_over(g, &all)
}

/// An edge subset with its total length accumulated in selection order (so
/// downstream budget comparisons are bit-exact).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSelection {
    pub edge_indices: Vec<usize>,
    pub total_length_km: f64,
}

/// The two anchors of the modeling-cost scale: the tree length and the full
/// network length, both accumulated in deterministic selection order.
pub fn length_anchors(g: &WeightedGraph, mst: &[usize]) -> (f64, f64) {
    let mst_len: f64 = mst.iter().map(|&i| g.edges()[i].weight_km).sum();
    let in_mst: std::collections::BTreeSet<usize> = mst.iter().copied().collect();
    let mut full_len = mst_len;
    for index in sorted_edge_indices(g) {
        if !in_mst.contains(&index) {
            full_len += g.edges()[index].weight_km;
        }
    }
    (mst_len, full_len)
}

/// Starting from the spanning tree, re-integrate original edges in ascending
/// weight order while the total edge length stays within the budget.
pub fn budget_select_edges(
    g: &WeightedGraph,
    mst: &[usize],
    modeling_budget_km: f64,
) -> Result<EdgeSelection> {
    let mut selected: Vec<usize> = mst.to_vec();
    let mut total: f64 = mst.iter().map(|&i| g.edges()[i].weight_km).sum();
    if modeling_budget_km < total {
        return Err(Error::domain(format!(
            "modeling budget {modeling_budget_km} km is below the spanning tree length {total} km"
        )));
    }
    let in_mst: std::collections::BTreeSet<usize> = mst.iter().copied().collect();
    for index in sorted_edge_indices(g) {
        if in_mst.contains(&index) {
            continue;
        }
        let w = g.edges()[index].weight_km;
        if total + w <= modeling_budget_km {
            total += w;
            selected.push(index);
        } else {
            break;
        }
    }
    Ok(EdgeSelection {
        edge_indices: selected,
        total_length_km: total,
    })
}

/// Fuel price per year, strictly increasing years.
#[derive(Debug, Clone, PartialEq)]
pub struct FuelSeries {
    entries: Vec<(i32, f64)>,
}

impl FuelSeries {
    pub fn new(entries: Vec<(i32, f64)>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::config("fuel series needs at least 2 entries"));
        }
        for pair in entries.windows(2) {
            if pair[1].0 <= pair[0].0 {
                return Err(Error::config("fuel series years must be strictly increasing"));
            }
        }
        for &(year, price) in &entries {
            if !(price > 0.0 && price.is_finite()) {
                return Err(Error::config(format!("invalid fuel price {price} in year {year}")));
            }
        }
        Ok(FuelSeries { entries })
    }

    pub fn entries(&self) -> &[(i32, f64)] {
        &self.entries
    }

    /// Min-max normalized prices (whole-series normalization); a constant
    /// series maps to zeros.
    pub fn normalized_prices(&self) -> Vec<f64> {
        let min = self.entries.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
        let max = self
            .entries
            .iter()
            .map(|e| e.1)
            .fold(f64::NEG_INFINITY, f64::max);
        self.entries
            .iter()
            .map(|e| if max > min { (e.1 - min) / (max - min) } else { 0.0 })
            .collect()
    }
}

/// Constant-complexity budget: the combined normalized cost each year must
/// equal `budget`.
#[derive(Debug, Clone, PartialEq)]
pub struct BudgetPolicy {
    pub budget: f64,
    pub combiner: CostCombiner,
}

impl Default for BudgetPolicy {
    fn default() -> Self {
        BudgetPolicy {
            budget: 1.0,
            combiner: CostCombiner::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct YearRecord {
    pub year: i32,
    pub fuel_price: f64,
    /// Min-max normalized fuel price.
    pub operation_cost: f64,
    /// Achieved normalized modeling cost: 0 at the spanning tree, 1 at the
    /// full network.
    pub modeling_cost: f64,
    pub edge_count: usize,
    pub total_edge_length_km: f64,
    pub avg_shortest_path_km: f64,
    /// Set when the implied budget fell outside [0, 1] and was clamped.
    pub clamped: bool,
}

pub const YEAR_CSV_HEADER: &str =
    "year,fuel_price,operation_cost,modeling_cost,edge_count,total_edge_length_km,avg_shortest_path_km";

pub fn year_records_to_csv(records: &[YearRecord]) -> String {
    let mut out = String::from(YEAR_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.year,
            r.fuel_price,
            r.operation_cost,
            r.modeling_cost,
            r.edge_count,
            r.total_edge_length_km,
            r.avg_shortest_path_km
        ));
    }
    out
}

/// Parse the per-year CSV back into records. The `clamped` diagnostic is not
/// part of the CSV schema and comes back as `false`; the JSON mirror keeps it.
pub fn year_records_from_csv(text: &str) -> Result<Vec<YearRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == YEAR_CSV_HEADER => {}
        _ => return Err(Error::parse(1, format!("expected header {YEAR_CSV_HEADER:?}"))),
    }
    let mut records = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != 7 {
            return Err(Error::parse(line, "expected 7 comma-separated fields"));
        }
        let num = |i: usize| -> Result<f64> {
            fields[i]
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid number {:?}", fields[i])))
        };
        records.push(YearRecord {
            year: fields[0]
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid year {:?}", fields[0])))?,
            fuel_price: num(1)?,
            operation_cost: num(2)?,
            modeling_cost: num(3)?,
            edge_count: fields[4]
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("invalid edge count {:?}", fields[4])))?,
            total_edge_length_km: num(5)?,
            avg_shortest_path_km: num(6)?,
            clamped: false,
        });
    }
    Ok(records)
}

/// Run the per-year budget experiment. Each year is computed independently
/// from the spanning-tree baseline: the normalized fuel price fixes the
/// operation cost, the remaining budget buys edges back, and the average
/// shortest path of the resulting network is reported.
pub fn run_budget_experiment(
    g: &WeightedGraph,
    fuel: &FuelSeries,
    policy: &BudgetPolicy,
) -> Result<Vec<YearRecord>> {
    let attainable = policy.combiner.model_weight + policy.combiner.operation_weight;
    if !policy.budget.is_finite() || policy.budget < 0.0 || policy.budget > attainable {
        return Err(Error::config(format!(
            "budget {} outside the attainable total range [0, {attainable}]",
            policy.budget
        )));
    }
    if policy.combiner.model_weight <= 0.0 {
        return Err(Error::config("budget policy needs a positive model weight"));
    }
    g.ensure_connected()?;
    let mst = minimum_spanning_tree(g)?;
    let (mst_len, full_len) = length_anchors(g, &mst);
    let op_norms = fuel.normalized_prices();
    let mut records = Vec::with_capacity(fuel.entries().len());
    for (&(year, price), &op_norm) in fuel.entries().iter().zip(&op_norms) {
        let implied =
            (policy.budget - policy.combiner.operation_weight * op_norm) / policy.combiner.model_weight;
        let clamped = !(0.0..=1.0).contains(&implied);
        let share = implied.clamp(0.0, 1.0);
        let budget_km = if share == 1.0 {
            full_len
        } else {
            mst_len + share * (full_len - mst_len)
        };
        let selection = budget_select_edges(g, &mst, budget_km)?;
        let modeling_cost = if full_len > mst_len {
            (selection.total_length_km - mst_len) / (full_len - mst_len)
        } else {
            0.0
        };
        let asp = average_shortest_path_over(g, &selection.edge_indices)?;
        records.push(YearRecord {
            year,
            fuel_price: price,
            operation_cost: op_norm,
            modeling_cost,
            edge_count: selection.edge_indices.len(),
            total_edge_length_km: selection.total_length_km,
            avg_shortest_path_km: asp,
            clamped,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::stats::spearman;

    fn plain_nodes(n: usize) -> Vec<Node> {
        (0..n)
            .map(|i| Node {
                id: format!("N{i:02}"),
                coords: None,
            })
            .collect()
    }

    fn graph(n: usize, edges: &[(usize, usize, f64)]) -> WeightedGraph {
        WeightedGraph::from_parts(plain_nodes(n), edges.to_vec()).unwrap()
    }

    #[test]
    fn haversine_basics() {
        assert_eq!(haversine_weight((12.0, 34.0), (12.0, 34.0)).unwrap(), 0.0);
        let half = haversine_weight((0.0, 0.0), (0.0, 180.0)).unwrap();
        assert!((half - std::f64::consts::PI * EARTH_RADIUS_KM).abs() <= 0.1);
        assert!(haversine_weight((91.0, 0.0), (0.0, 0.0)).is_err());
        assert!(haversine_weight((0.0, -181.0), (0.0, 0.0)).is_err());
    }

    #[test]
    fn haversine_jfk_lax_matches_independent_formula() {
        let jfk = (40.6413, -73.7781);
        let lax = (33.9416, -118.4085);
        let d = haversine_weight(jfk, lax).unwrap();
        // independent route: spherical law of cosines
        let (lat1, lon1) = (jfk.0.to_radians(), jfk.1.to_radians());
        let (lat2, lon2) = (lax.0.to_radians(), lax.1.to_radians());
        let oracle = EARTH_RADIUS_KM
            * (lat1.sin() * lat2.sin() + lat1.cos() * lat2.cos() * (lon2 - lon1).cos()).acos();
        assert!((d - oracle).abs() < 1e-6, "haversine {d} vs oracle {oracle}");
        assert!((d - 3974.0).abs() <= 10.0, "JFK-LAX distance {d}");
    }

    #[test]
    fn triangle_mst_drops_heaviest_edge() {
        let g = graph(3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)]);
        let mst = minimum_spanning_tree(&g).unwrap();
        let total: f64 = mst.iter().map(|&i| g.edges()[i].weight_km).sum();
        assert_eq!(mst.len(), 2);
        assert_eq!(total, 3.0);
    }

    #[test]
    fn path_graph_is_its_own_mst() {
        let g = graph(4, &[(0, 1, 5.0), (1, 2, 2.0), (2, 3, 7.0)]);
        let mut mst = minimum_spanning_tree(&g).unwrap();
        mst.sort_unstable();
        assert_eq!(mst, vec![0, 1, 2]);
    }

    #[test]
    fn disconnected_graph_reports_components() {
        let g = graph(5, &[(0, 1, 1.0), (2, 3, 1.0)]);
        match minimum_spanning_tree(&g) {
            Err(Error::Disconnected { components }) => assert_eq!(components, vec![2, 2, 1]),
            other => panic!("expected disconnected error, got {other:?}"),
        }
    }

    /// Exhaustive spanning-tree enumeration: the independent optimality
    /// oracle for Kruskal.
    fn brute_force_mst_weight(g: &WeightedGraph) -> f64 {
        let n = g.node_count();
        let m = g.edge_count();
        let k = n - 1;
        let mut best = f64::INFINITY;
        let mut choice: Vec<usize> = (0..k).collect();
        loop {
            let mut dsu = DisjointSet::new(n);
            let mut joined = 0;
            let mut weight = 0.0;
            for &i in &choice {
                let e = g.edges()[i];
                if dsu.union(e.u, e.v) {
                    joined += 1;
                }
                weight += e.weight_km;
            }
            if joined == k {
                best = best.min(weight);
            }
            // next k-combination of 0..m
            let mut i = k;
            loop {
                if i == 0 {
                    return best;
                }
                i -= 1;
                if choice[i] != i + m - k {
                    choice[i] += 1;
                    for j in i + 1..k {
                        choice[j] = choice[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn kruskal_matches_exhaustive_oracle_on_small_graphs() {
        let mut rng = Rng::new(2024);
        let mut tested = 0;
        while tested < 30 {
            let n = 4 + rng.index(5); // 4..=8 nodes
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < 0.55 {
                        edges.push((u, v, (1.0 + 9.0 * rng.next_f64() * 10.0).round() / 10.0));
                    }
                }
            }
            if edges.len() < n - 1 || edges.len() > 16 {
                continue;
            }
            let g = graph(n, &edges);
            if g.ensure_connected().is_err() {
                continue;
            }
            tested += 1;
            let mst = minimum_spanning_tree(&g).unwrap();
            let total: f64 = mst.iter().map(|&i| g.edges()[i].weight_km).sum();
            let oracle = brute_force_mst_weight(&g);
            assert!(
                (total - oracle).abs() < 1e-9,
                "kruskal {total} vs oracle {oracle}"
            );
        }
    }

    #[test]
    fn asp_basics() {
        let two = graph(2, &[(0, 1, 7.5)]);
        assert_eq!(average_shortest_path(&two).unwrap(), 7.5);
        let triangle = graph(3, &[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]);
        assert_eq!(average_shortest_path(&triangle).unwrap(), 1.0);
    }

    /// Floyd-Warshall: the independent all-pairs oracle.
    #[allow(clippy::needless_range_loop)]
    fn asp_oracle(g: &WeightedGraph) -> f64 {
        let n = g.node_count();
        let mut d = vec![vec![f64::INFINITY; n]; n];
        for i in 0..n {
            d[i][i] = 0.0;
        }
        for e in g.edges() {
            d[e.u][e.v] = d[e.u][e.v].min(e.weight_km);
            d[e.v][e.u] = d[e.v][e.u].min(e.weight_km);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        let mut sum = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                sum += d[i][j];
            }
        }
        sum / (n * (n - 1) / 2) as f64
    }

    #[test]
    fn dijkstra_asp_matches_floyd_warshall() {
        let mut rng = Rng::new(31);
        for _ in 0..10 {
            let n = 20;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < 0.2 {
                        edges.push((u, v, 1.0 + 99.0 * rng.next_f64()));
                    }
                }
            }
            // ring to guarantee connectivity
            for u in 0..n {
                let v = (u + 1) % n;
                if !edges.iter().any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v))) {
                    edges.push((u.min(v), u.max(v), 50.0 + 50.0 * rng.next_f64()));
                }
            }
            let g = graph(n, &edges);
            let asp = average_shortest_path(&g).unwrap();
            let oracle = asp_oracle(&g);
            assert!((asp - oracle).abs() < 1e-9, "asp {asp} vs oracle {oracle}");
        }
    }

    #[test]
    fn budget_boundaries_recover_mst_and_full_network() {
        let g = graph(
            5,
            &[
                (0, 1, 1.0),
                (1, 2, 1.5),
                (2, 3, 2.0),
                (3, 4, 2.5),
                (0, 2, 3.0),
                (1, 3, 3.5),
                (0, 4, 4.0),
            ],
        );
        let mst = minimum_spanning_tree(&g).unwrap();
        let (mst_len, full_len) = length_anchors(&g, &mst);

        let at_tree = budget_select_edges(&g, &mst, mst_len).unwrap();
        assert_eq!(at_tree.edge_indices.len(), mst.len());
        assert_eq!(at_tree.total_length_km, mst_len);

        let at_full = budget_select_edges(&g, &mst, full_len).unwrap();
        assert_eq!(at_full.edge_indices.len(), g.edge_count());

        assert!(budget_select_edges(&g, &mst, mst_len - 0.1).is_err());
    }

    #[test]
    fn budget_selection_is_prefix_maximal() {
        let g = graph(
            4,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 3, 1.0),
                (0, 2, 2.0),
                (1, 3, 4.0),
                (0, 3, 8.0),
            ],
        );
        let mst = minimum_spanning_tree(&g).unwrap();
        let (mst_len, _) = length_anchors(&g, &mst);
        let budget = mst_len + 2.5;
        let sel = budget_select_edges(&g, &mst, budget).unwrap();
        assert!(sel.total_length_km <= budget);
        // the first excluded candidate (weight 4.0) would blow the budget
        assert_eq!(sel.edge_indices.len(), mst.len() + 1);
        assert!(sel.total_length_km + 4.0 > budget);
        // larger budget never yields fewer edges
        let bigger = budget_select_edges(&g, &mst, budget + 4.0).unwrap();
        assert!(bigger.edge_indices.len() >= sel.edge_indices.len());
    }

    fn fixture_graph(seed: u64) -> WeightedGraph {
        // random geometric-ish weights on a dense-ish graph
        let mut rng = Rng::new(seed);
        let n = 12;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_f64() < 0.4 {
                    edges.push((u, v, 10.0 + 990.0 * rng.next_f64()));
                }
            }
        }
        for u in 0..n {
            let v = (u + 1) % n;
            if !edges.iter().any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v), 500.0 + 100.0 * rng.next_f64()));
            }
        }
        graph(n, &edges)
    }

    #[test]
    fn asp_is_anti_monotone_along_the_budget_sweep() {
        let g = fixture_graph(77);
        let mst = minimum_spanning_tree(&g).unwrap();
        let (mst_len, full_len) = length_anchors(&g, &mst);
        let mut last_asp = f64::INFINITY;
        let mut last_edges = 0;
        for k in 0..=20 {
            let budget = mst_len + (full_len - mst_len) * k as f64 / 20.0;
            let sel = budget_select_edges(&g, &mst, budget).unwrap();
            let asp = average_shortest_path_over(&g, &sel.edge_indices).unwrap();
            assert!(
                asp <= last_asp + 1e-9,
                "asp grew from {last_asp} to {asp} at step {k}"
            );
            assert!(sel.edge_indices.len() >= last_edges);
            last_asp = asp;
            last_edges = sel.edge_indices.len();
        }
    }

    fn fuel_fixture() -> FuelSeries {
        FuelSeries::new(
            (0..12)
                .map(|i| {
                    let year = 2000 + i;
                    // rises then falls; unique min (first year) and max
                    let price = 1.0 + 2.0 * (i as f64 * 0.45).sin().abs();
                    (year, price)
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn budget_experiment_hits_both_boundaries_and_anticorrelates() {
        let g = fixture_graph(99);
        let fuel = fuel_fixture();
        let records = run_budget_experiment(&g, &fuel, &BudgetPolicy::default()).unwrap();
        assert_eq!(records.len(), fuel.entries().len());

        let mst = minimum_spanning_tree(&g).unwrap();
        let max_year = records
            .iter()
            .max_by(|a, b| a.fuel_price.total_cmp(&b.fuel_price))
            .unwrap();
        assert_eq!(max_year.edge_count, mst.len());
        assert_eq!(max_year.modeling_cost, 0.0);

        let min_year = records
            .iter()
            .min_by(|a, b| a.fuel_price.total_cmp(&b.fuel_price))
            .unwrap();
        assert_eq!(min_year.edge_count, g.edge_count());
        assert_eq!(min_year.modeling_cost, 1.0);

        let fuel_prices: Vec<f64> = records.iter().map(|r| r.fuel_price).collect();
        let edge_counts: Vec<f64> = records.iter().map(|r| r.edge_count as f64).collect();
        let rho = spearman(&fuel_prices, &edge_counts).unwrap();
        assert!(rho < 0.0, "fuel vs edge count rho {rho}");

        let asps: Vec<f64> = records.iter().map(|r| r.avg_shortest_path_km).collect();
        let rho_asp = spearman(&edge_counts, &asps).unwrap();
        assert!(rho_asp < 0.0, "edges vs asp rho {rho_asp}");

        assert!(records.iter().all(|r| !r.clamped));
    }

    #[test]
    fn budget_experiment_is_deterministic() {
        let g = fixture_graph(99);
        let fuel = fuel_fixture();
        let a = run_budget_experiment(&g, &fuel, &BudgetPolicy::default()).unwrap();
        let b = run_budget_experiment(&g, &fuel, &BudgetPolicy::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(year_records_to_csv(&a), year_records_to_csv(&b));
    }

    #[test]
    fn year_records_round_trip_through_csv() {
        let g = fixture_graph(99);
        let fuel = fuel_fixture();
        let records = run_budget_experiment(&g, &fuel, &BudgetPolicy::default()).unwrap();
        let parsed = year_records_from_csv(&year_records_to_csv(&records)).unwrap();
        assert_eq!(parsed.len(), records.len());
        for (a, b) in records.iter().zip(&parsed) {
            assert_eq!(a.year, b.year);
            assert_eq!(a.fuel_price, b.fuel_price);
            assert_eq!(a.operation_cost, b.operation_cost);
            assert_eq!(a.modeling_cost, b.modeling_cost);
            assert_eq!(a.edge_count, b.edge_count);
            assert_eq!(a.total_edge_length_km, b.total_edge_length_km);
            assert_eq!(a.avg_shortest_path_km, b.avg_shortest_path_km);
        }
        // and through the JSON mirror, clamped included
        let json = serde_json::to_string(&records).unwrap();
        let back: Vec<YearRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, records);
    }

    #[test]
    fn out_of_range_budgets_are_clamped_and_flagged() {
        let g = fixture_graph(99);
        let fuel = fuel_fixture();
        let policy = BudgetPolicy {
            budget: 1.5,
            combiner: CostCombiner::default(),
        };
        let records = run_budget_experiment(&g, &fuel, &policy).unwrap();
        // budget 1.5 implies modeling share > 1 whenever op_norm < 0.5
        assert!(records.iter().any(|r| r.clamped));
        for r in &records {
            assert!((0.0..=1.0).contains(&r.modeling_cost));
        }
    }

    #[test]
    fn unattainable_budget_is_rejected() {
        let g = fixture_graph(99);
        let fuel = fuel_fixture();
        for budget in [-0.5, 2.5, f64::NAN] {
            let policy = BudgetPolicy {
                budget,
                combiner: CostCombiner::default(),
            };
            assert!(matches!(
                run_budget_experiment(&g, &fuel, &policy),
                Err(Error::Config(_))
            ));
        }
    }

    #[test]
    fn graph_validation_rejects_bad_edges() {
        assert!(WeightedGraph::from_parts(plain_nodes(3), vec![(0, 0, 1.0)]).is_err());
        assert!(WeightedGraph::from_parts(plain_nodes(3), vec![(0, 5, 1.0)]).is_err());
        assert!(
            WeightedGraph::from_parts(plain_nodes(3), vec![(0, 1, 1.0), (1, 0, 2.0)]).is_err()
        );
        assert!(WeightedGraph::from_parts(plain_nodes(3), vec![(0, 1, 0.0)]).is_err());
        assert!(WeightedGraph::from_parts(plain_nodes(3), vec![(0, 1, f64::NAN)]).is_err());
    }

    #[test]
    fn fuel_series_validation() {
        assert!(FuelSeries::new(vec![(2000, 1.0)]).is_err());
        assert!(FuelSeries::new(vec![(2000, 1.0), (2000, 2.0)]).is_err());
        assert!(FuelSeries::new(vec![(2000, 1.0), (2001, -2.0)]).is_err());
        let ok = FuelSeries::new(vec![(2000, 2.0), (2001, 4.0), (2002, 3.0)]).unwrap();
        assert_eq!(ok.normalized_prices(), vec![0.0, 1.0, 0.5]);
    }
}
