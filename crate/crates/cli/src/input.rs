use std::io::Read;

use sombor_core::extremal::{discover_family, ExtremalCatalog, FamilyId};
use sombor_core::graph::named;
use sombor_core::io::{graph6, read_json_graph};
use sombor_core::{Exponent, Graph, WeightFunction};

use crate::args::{CatalogArg, GraphInput};
use crate::Failure;

pub type Res<T> = std::result::Result<T, Failure>;

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub fn read_graph(input: &GraphInput) -> Res<Graph> {
    if let Some(code) = &input.graph6 {
        return Ok(graph6::decode(code)?);
    }
    if let Some(path) = &input.json {
        return Ok(read_json_graph(path)?);
    }
    if let Some(spec) = &input.named {
        return Ok(named::build(spec)?);
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("reading stdin: {e}")))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| usage("no graph given: pass --graph6, --json or --named, or graph6 on stdin"))?;
    Ok(graph6::decode(line)?)
}

pub fn weighting(spec: &str) -> Res<WeightFunction> {
    Ok(spec.parse()?)
}

/// `7`, `5..7`, `5..=7` (both inclusive) or `5,6,7`.
pub fn orders(spec: &str) -> Res<Vec<usize>> {
    let bad = || usage(format!("bad order list {spec:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let spec = spec.trim();
    let out: Vec<usize> = if let Some((a, b)) = spec.split_once("..") {
        let (lo, hi) = (num(a)?, num(b.trim_start_matches('='))?);
        if lo > hi {
            return Err(bad());
        }
        (lo..=hi).collect()
    } else {
        spec.split(',').map(num).collect::<Res<_>>()?
    };
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

/// Weightings from `--p` values followed by `--weighting` specs.
pub fn grid(ps: &[String], extra: &[String]) -> Res<Vec<WeightFunction>> {
    let mut out = Vec::new();
    for p in ps.iter().filter(|p| !p.trim().is_empty()) {
        match p.trim().parse::<Exponent>()? {
            Exponent::Infinite => out.push(WeightFunction::psombor_inf()),
            Exponent::Finite(x) => out.push(WeightFunction::psombor(x)?),
        }
    }
    for w in extra {
        out.push(weighting(w)?);
    }
    Ok(out)
}

pub fn load_catalog(arg: &CatalogArg) -> Res<ExtremalCatalog> {
    match &arg.catalog {
        Some(path) => Ok(ExtremalCatalog::load(path)?),
        None => Ok(ExtremalCatalog::new()),
    }
}

pub fn save_catalog(arg: &CatalogArg, catalog: &ExtremalCatalog) -> Res<()> {
    if let Some(path) = &arg.catalog {
        catalog.save(path)?;
    }
    Ok(())
}

/// Makes sure `catalog` holds `id` at `n`, running discovery on the
/// family's default grid when it does not.
pub fn ensure_family(catalog: &mut ExtremalCatalog, id: FamilyId, n: usize) -> Res<()> {
    if catalog.get(id.as_str(), n).is_some() {
        return Ok(());
    }
    let report = discover_family(id, &[n], &id.default_grid(), catalog)?;
    if catalog.get(id.as_str(), n).is_none() {
        return Err(Failure::Verification(format!(
            "discovery of {} at n = {n} did not settle: {}",
            id.as_str(),
            serde_json::to_string(&report.findings).unwrap_or_default()
        )));
    }
    Ok(())
}
