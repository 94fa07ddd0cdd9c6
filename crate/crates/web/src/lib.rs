//! Browser bindings. Every export takes plain strings and returns a JSON
//! string; errors come back as a thrown string.

use chipfire::certify::{certify_product, CertifyOptions};
use chipfire::divisor::{dhar_burn, q_reduce_with_script, Divisor};
use chipfire::gonality::gonality;
use chipfire::invariants::{edge_connectivity, independence_number, vertex_connectivity};
use chipfire::{generators, Multigraph};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Exhaustive gonality is only attempted up to this many vertices.
pub const MAX_GONALITY_VERTICES: usize = 14;

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
    lambda: u64,
    kappa: u64,
    alpha: usize,
    gonality: Option<u64>,
    witness: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct BurnJson {
    burned: Vec<usize>,
    unburned: Vec<usize>,
    reduced: Vec<i64>,
    firings: usize,
}

#[derive(Serialize)]
struct CheckJson {
    statement: &'static str,
    orientation: String,
    value: Option<u64>,
    failed: Vec<String>,
}

#[derive(Serialize)]
struct CertifyJson {
    n: usize,
    certified: Option<(&'static str, String, u64)>,
    lower: u64,
    upper: u64,
    lower_source: String,
    upper_source: String,
    checks: Vec<CheckJson>,
}

/// `"grid 3 4"`, `"hypercube 3"`, `"random-tree 8 1"` (last number is the seed), ...
pub fn parse_family(family: &str) -> Result<Multigraph, String> {
    let mut words = family.split_whitespace();
    let family = words.next().ok_or("empty family")?;
    let args: Vec<&str> = words.collect();
    let ints = |k: usize| -> Result<Vec<usize>, String> {
        let v = args[..k.min(args.len())]
            .iter()
            .map(|a| a.parse::<usize>().map_err(|e| format!("{a}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if v.len() != k || args.len() != k {
            return Err(format!("{family} takes {k} number(s)"));
        }
        Ok(v)
    };
    let all = || ints(args.len());
    let g = match family {
        "path" => generators::path(ints(1)?[0]),
        "cycle" => generators::cycle(ints(1)?[0]),
        "complete" => generators::complete(ints(1)?[0]),
        "star" => generators::star(ints(1)?[0]),
        "hypercube" => generators::hypercube(ints(1)?[0]),
        "complete-bipartite" => {
            let v = ints(2)?;
            generators::complete_bipartite(v[0], v[1])
        }
        "complete-multipartite" => generators::complete_multipartite(&all()?),
        "grid" => generators::grid(&all()?),
        "random-tree" => {
            let v = ints(2)?;
            generators::random_tree(v[0], v[1] as u64)
        }
        "random-graph" => {
            if args.len() != 3 {
                return Err("random-graph takes n p seed".into());
            }
            let n = args[0].parse::<usize>().map_err(|e| e.to_string())?;
            let p = args[1].parse::<f64>().map_err(|e| e.to_string())?;
            let seed = args[2].parse::<u64>().map_err(|e| e.to_string())?;
            generators::random_graph(n, p, seed)
        }
        other => return Err(format!("unknown family `{other}`")),
    };
    g.map_err(|e| e.to_string())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

pub fn graph_json(family: &str) -> Result<String, String> {
    let g = parse_family(family)?;
    let n = g.vertex_count();
    let gon = if g.is_connected() && n <= MAX_GONALITY_VERTICES {
        Some(gonality(&g).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(json(&GraphJson {
        n,
        edges: g.edges(),
        lambda: edge_connectivity(&g),
        kappa: vertex_connectivity(&g),
        alpha: independence_number(&g),
        gonality: gon.as_ref().map(|r| r.value),
        witness: gon.map(|r| r.witness.chips().to_vec()),
    }))
}

pub fn burn_json(family: &str, chips: &str, q: usize) -> Result<String, String> {
    let g = parse_family(family)?;
    let chips = chips
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|e| format!("{s}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    let d = Divisor::new(&g, chips).map_err(|e| e.to_string())?;
    let burn = dhar_burn(&g, &d, q).map_err(|e| e.to_string())?;
    let red = q_reduce_with_script(&g, &d, q).map_err(|e| e.to_string())?;
    Ok(json(&BurnJson {
        burned: burn.burned.to_vec(),
        unburned: burn.unburned.to_vec(),
        reduced: red.divisor.chips().to_vec(),
        firings: red.script.len(),
    }))
}

pub fn certify_json(g_family: &str, h_family: &str) -> Result<String, String> {
    let (g, h) = (parse_family(g_family)?, parse_family(h_family)?);
    let cert = certify_product(&g, &h, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    let checks = cert
        .checks
        .iter()
        .map(|c| CheckJson {
            statement: c.id,
            orientation: c.orientation.to_string(),
            value: c.value,
            failed: c
                .hypotheses
                .iter()
                .filter(|h| !h.pass)
                .map(|h| format!("{} ({})", h.name, h.detail))
                .collect(),
        })
        .collect();
    Ok(json(&CertifyJson {
        n: g.vertex_count() * h.vertex_count(),
        certified: cert
            .certified
            .map(|c| (c.statement, c.orientation.to_string(), c.value)),
        lower: cert.bounds.lower,
        upper: cert.bounds.upper,
        lower_source: cert.bounds.lower_source,
        upper_source: cert.bounds.upper_source,
        checks,
    }))
}

/// Edges, invariants and (for small connected graphs) gonality with a witness.
#[wasm_bindgen]
pub fn graph(family: &str) -> Result<String, JsValue> {
    graph_json(family).map_err(|e| JsValue::from_str(&e))
}

/// Dhar's burning process from `q` plus the `q`-reduced form.
#[wasm_bindgen]
pub fn burn(family: &str, chips: &str, q: usize) -> Result<String, JsValue> {
    burn_json(family, chips, q).map_err(|e| JsValue::from_str(&e))
}

/// Product certificate for two families.
#[wasm_bindgen]
pub fn certify(g_family: &str, h_family: &str) -> Result<String, JsValue> {
    certify_json(g_family, h_family).map_err(|e| JsValue::from_str(&e))
}
