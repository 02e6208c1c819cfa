//! Dataset ingestion: airport nodes, flight edges, and fuel-price CSVs.
//!
//! Schemas (headers required):
//!   nodes:  `id,lat,lon`; lat/lon may be empty when every incident edge
//!           carries an explicit weight
//!   edges:  `src,dst[,weight_km]`; a missing weight is computed by the
//!           haversine distance between the endpoints
//!   fuel:   `year,price_usd_per_gallon`
//!
//! Every schema violation reports its line number.

use std::collections::BTreeMap;
use std::path::Path;

use cplx_core::network::{haversine_weight, FuelSeries, Node, WeightedGraph};
use cplx_core::{Error, Result};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_nodes(text: &str) -> Result<Vec<Node>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "id,lat,lon" => {}
        Some((_, header)) => {
            return Err(Error::parse(1, format!("expected header `id,lat,lon`, got {header:?}")))
        }
        None => return Err(Error::parse(1, "empty nodes file")),
    }
    let mut nodes = Vec::new();
    let mut seen = BTreeMap::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(Error::parse(line, "expected `id,lat,lon`"));
        }
        let id = fields[0].to_string();
        if id.is_empty() {
            return Err(Error::parse(line, "empty node id"));
        }
        if seen.insert(id.clone(), line).is_some() {
            return Err(Error::parse(line, format!("duplicate node id {id:?}")));
        }
        let coords = match (fields[1], fields[2]) {
            ("", "") => None,
            (lat, lon) => {
                let lat: f64 = lat
                    .parse()
                    .map_err(|_| Error::parse(line, format!("invalid latitude {lat:?}")))?;
                let lon: f64 = lon
                    .parse()
                    .map_err(|_| Error::parse(line, format!("invalid longitude {lon:?}")))?;
                if !((-90.0..=90.0).contains(&lat) && (-180.0..=180.0).contains(&lon)) {
                    return Err(Error::parse(line, format!("coordinates ({lat}, {lon}) out of range")));
                }
                Some((lat, lon))
            }
        };
        nodes.push(Node { id, coords });
    }
    if nodes.is_empty() {
        return Err(Error::parse(1, "nodes file has no data rows"));
    }
    Ok(nodes)
}

pub fn parse_edges(text: &str, nodes: &[Node]) -> Result<Vec<(usize, usize, f64)>> {
    let index: BTreeMap<&str, usize> = nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (n.id.as_str(), i))
        .collect();
    let mut lines = text.lines().enumerate();
    let with_weight = match lines.next() {
        Some((_, h)) if h.trim() == "src,dst" => false,
        Some((_, h)) if h.trim() == "src,dst,weight_km" => true,
        Some((_, h)) => {
            return Err(Error::parse(
                1,
                format!("expected header `src,dst` or `src,dst,weight_km`, got {h:?}"),
            ))
        }
        None => return Err(Error::parse(1, "empty edges file")),
    };
    let mut edges = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').map(str::trim).collect();
        if fields.len() != if with_weight { 3 } else { 2 } {
            return Err(Error::parse(line, "wrong number of fields"));
        }
        let resolve = |id: &str| -> Result<usize> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::parse(line, format!("unknown node id {id:?}")))
        };
        let u = resolve(fields[0])?;
        let v = resolve(fields[1])?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop at {:?}", fields[0])));
        }
        // an explicitly supplied weight overrides the haversine distance
        let weight = if with_weight && !fields[2].is_empty() {
            fields[2]
                .parse::<f64>()
                .map_err(|_| Error::parse(line, format!("invalid weight {:?}", fields[2])))?
        } else {
            match (nodes[u].coords, nodes[v].coords) {
                (Some(a), Some(b)) => haversine_weight(a, b)?,
                _ => {
                    return Err(Error::parse(
                        line,
                        format!(
                            "edge {}-{} has no weight and an endpoint without coordinates",
                            fields[0], fields[1]
                        ),
                    ))
                }
            }
        };
        if edges
            .iter()
            .any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v)))
        {
            return Err(Error::parse(
                line,
                format!("duplicate edge {}-{}", fields[0], fields[1]),
            ));
        }
        edges.push((u.min(v), u.max(v), weight));
    }
    Ok(edges)
}

pub fn parse_fuel(text: &str) -> Result<FuelSeries> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == "year,price_usd_per_gallon" => {}
        Some((_, h)) => {
            return Err(Error::parse(
                1,
                format!("expected header `year,price_usd_per_gallon`, got {h:?}"),
            ))
        }
        None => return Err(Error::parse(1, "empty fuel file")),
    }
    let mut entries = Vec::new();
    for (idx, raw) in lines {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let (year, price) = raw
            .split_once(',')
            .ok_or_else(|| Error::parse(line, "expected `year,price`"))?;
        let year: i32 = year
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid year {year:?}")))?;
        let price: f64 = price
            .trim()
            .parse()
            .map_err(|_| Error::parse(line, format!("invalid price {price:?}")))?;
        entries.push((year, price));
    }
    FuelSeries::new(entries)
}

/// Load and validate a connected weighted graph from node and edge CSVs.
pub fn load_graph(nodes_path: &Path, edges_path: &Path) -> Result<WeightedGraph> {
    let nodes = parse_nodes(&read(nodes_path)?)?;
    let edges = parse_edges(&read(edges_path)?, &nodes)?;
    let graph = WeightedGraph::from_parts(nodes, edges)?;
    graph.ensure_connected()?;
    Ok(graph)
}

pub fn load_fuel(path: &Path) -> Result<FuelSeries> {
    parse_fuel(&read(path)?)
}
