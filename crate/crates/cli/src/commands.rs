use std::fmt::Write;

use serde::Serialize;
use sombor_core::enumerate::{enumerate_with_certificates, FamilySpec};
use sombor_core::extremal::{
    discover_family, rank, verify_theorem, CatalogEntry, DiscoveryReport, FamilyId, Finding, RankingReport, TheoremId,
    TheoremVerdict,
};
use sombor_core::graph::canonical_certificate;
use sombor_core::io::{dot, graph6, graph_to_json};
use sombor_core::numfmt::{self, format_sig};
use sombor_core::spectra::{
    char_poly, coarsest_equitable, largest_real_root, quotient, rho_of, spectrum_report, weighted_adjacency,
    SpectrumReport, VertexPartition, WeightedMatrix, MAX_CHAR_POLY_ORDER,
};
use sombor_core::transforms::{verify_monotone, OpSpec, TransformOutcome};
use sombor_core::weighting::check_property_pstar;
use sombor_core::{Certificate, EdgeList, Exact, Graph, WeightFunction};

use crate::args::*;
use crate::input::*;
use crate::{sweep, Outcome};

pub fn run(cmd: Command) -> Res<Outcome> {
    match cmd {
        Command::Spectrum(a) => spectrum(a),
        Command::Rank(a) => rank_cmd(a),
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Kelmans(a) => kelmans_cmd(a),
        Command::Quotient(a) => quotient_cmd(a),
        Command::Named(a) => named_cmd(a),
        Command::Export(a) => export(a),
        Command::Discover(a) => discover(a),
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialise");
    s.push('\n');
    s
}

fn no_csv(format: Format, what: &str) -> Res<()> {
    if format == Format::Csv {
        return Err(usage(format!("{what} has no csv rendering; use table or json")));
    }
    Ok(())
}

fn joined<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn spectrum(a: SpectrumArgs) -> Res<Outcome> {
    no_csv(a.format, "spectrum")?;
    if !(a.tol > 0.0 && a.tol < 1.0) {
        return Err(usage(format!("tolerance must lie in (0, 1), got {}", a.tol)));
    }
    let g = read_graph(&a.input)?;
    let f = weighting(&a.weighting)?;
    let r: SpectrumReport = spectrum_report(&g, &f, a.tol)?;
    Ok(Outcome::pass(match a.format {
        Format::Json => json(&r),
        _ => format!(
            "certificate {}\nweighting {}\nrho {}\nresidual {}\neigenvector {}\n",
            r.certificate.as_str(),
            r.weighting,
            format_sig(r.rho),
            format_sig(r.residual),
            r.eigenvector
                .iter()
                .map(|&x| format_sig(x))
                .collect::<Vec<_>>()
                .join(" ")
        ),
    }))
}

fn family_spec(kind: FamilyKind, n: usize, m: Option<usize>) -> Res<FamilySpec> {
    let spec = match (kind, m) {
        (FamilyKind::Graphs, Some(m)) => FamilySpec::Graphs { n, m },
        (FamilyKind::Graphs, None) => return Err(usage("--family graphs needs --m")),
        (_, Some(_)) => return Err(usage("--m only applies to --family graphs")),
        (FamilyKind::Trees, None) => FamilySpec::Trees { n },
        (FamilyKind::Unicyclic, None) => FamilySpec::Unicyclic { n },
        (FamilyKind::Bicyclic, None) => FamilySpec::Bicyclic { n },
    };
    spec.validate()?;
    Ok(spec)
}

fn rank_key(spec: FamilySpec) -> String {
    match spec {
        FamilySpec::Trees { .. } => "trees".into(),
        FamilySpec::Unicyclic { .. } => "unicyclic".into(),
        FamilySpec::Bicyclic { .. } => "bicyclic".into(),
        FamilySpec::Graphs { m, .. } => format!("graphs-m{m}"),
    }
}

fn rank_cmd(a: RankArgs) -> Res<Outcome> {
    let f = weighting(&a.weighting)?;
    let specs: Vec<FamilySpec> = orders(&a.n)?
        .into_iter()
        .map(|n| family_spec(a.family, n, a.m))
        .collect::<Res<_>>()?;
    let reports: Vec<RankingReport> = specs
        .iter()
        .map(|&spec| rank(spec, &f, a.k, a.direction))
        .collect::<Result<_, _>>()?;
    if a.catalog.catalog.is_some() {
        let mut catalog = load_catalog(&a.catalog)?;
        for (spec, report) in specs.iter().zip(&reports) {
            for e in &report.entries {
                catalog.insert(CatalogEntry {
                    id: format!(
                        "rank:{}:{}:{}:{}",
                        rank_key(*spec),
                        a.direction,
                        report.weighting,
                        e.rank
                    ),
                    n: spec.order(),
                    certificate: e.certificate.clone(),
                    degree_sequence: e.degree_sequence.clone(),
                    family: *spec,
                    direction: a.direction,
                    rank: e.rank,
                    weightings: vec![report.weighting.clone()],
                });
            }
        }
        save_catalog(&a.catalog, &catalog)?;
    }
    Ok(Outcome::pass(match a.format {
        Format::Json => json(&reports),
        Format::Table => joined(&reports.iter().map(RankingReport::to_table).collect::<Vec<_>>(), "\n"),
        Format::Csv => {
            let mut out = String::from("family,rank,certificate,rho,degree_sequence,tied\n");
            for r in &reports {
                for line in r.to_csv().lines().skip(1) {
                    let _ = writeln!(out, "{},{line}", r.family);
                }
            }
            out
        }
    }))
}

fn enumerate_cmd(a: EnumerateArgs) -> Res<Outcome> {
    let spec = family_spec(a.family, a.n, a.m)?;
    let family = enumerate_with_certificates(spec)?;
    if a.count {
        return Ok(Outcome::pass(format!("{}\n", family.len())));
    }
    Ok(Outcome::pass(match a.format {
        GraphFormat::Graph6 => family.iter().map(|(c, _)| format!("{}\n", c.as_str())).collect(),
        GraphFormat::Json => json(&family.iter().map(|(_, g)| EdgeList::from(g)).collect::<Vec<_>>()),
        GraphFormat::Dot => return Err(usage("enumerate writes graph6 or json")),
    }))
}

fn verdict_table(v: &TheoremVerdict) -> String {
    let mut out = format!(
        "{}  {}  min margin {}\n  {}\n",
        v.theorem,
        if v.pass { "PASS" } else { "FAIL" },
        format_sig(v.min_margin),
        v.claim
    );
    for p in &v.points {
        let _ = write!(
            out,
            "  n {:>2}  {:<14}  {}  margin {:<16}  {}",
            p.n,
            p.weighting,
            if p.pass { "pass" } else { "FAIL" },
            format_sig(p.min_margin),
            joined(&p.observed.iter().map(Certificate::as_str).collect::<Vec<_>>(), " ")
        );
        if let Some(note) = &p.note {
            let _ = write!(out, "  ({note})");
        }
        out.push('\n');
    }
    out
}

fn verify(a: VerifyArgs) -> Res<Outcome> {
    no_csv(a.format, "verify")?;
    let ids: Vec<TheoremId> = if a.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![a.theorem.parse()?]
    };
    let ns = a.n.as_deref().map(orders).transpose()?;
    let grid = grid(&a.p, &a.weighting)?;
    let mut catalog = load_catalog(&a.catalog)?;
    let mut verdicts = Vec::new();
    for id in ids {
        let ns = ns.clone().unwrap_or_else(|| id.default_n());
        let grid = if grid.is_empty() {
            id.default_grid()
        } else {
            grid.clone()
        };
        for fam in id.required_families() {
            for &n in &ns {
                if fam.position(n).is_ok() {
                    ensure_family(&mut catalog, *fam, n)?;
                }
            }
        }
        verdicts.push(verify_theorem(id, &ns, &grid, &catalog)?);
    }
    save_catalog(&a.catalog, &catalog)?;
    let ok = verdicts.iter().all(|v| v.pass);
    let text = match a.format {
        Format::Json => json(&verdicts),
        _ => verdicts.iter().map(verdict_table).collect::<Vec<_>>().join("\n"),
    };
    Ok(Outcome { text, ok })
}

#[derive(Serialize)]
struct TransformReport {
    weighting: String,
    #[serde(flatten)]
    outcome: TransformOutcome,
}

fn check_pstar(fs: &[WeightFunction], max_degree: usize) -> Res<()> {
    for f in fs {
        if !check_property_pstar(f, max_degree.max(2))?.passed() {
            return Err(usage(format!("{f} lacks property P* up to degree {max_degree}")));
        }
    }
    Ok(())
}

fn kelmans_cmd(a: KelmansArgs) -> Res<Outcome> {
    no_csv(a.format, "kelmans")?;
    let mut fs = grid(&[], &a.weighting)?;
    if let Some(cases) = a.sweep {
        if a.min_n < 3 || a.min_n > a.max_n || a.max_n > 16 {
            return Err(usage("sweep orders must satisfy 3 <= min-n <= max-n <= 16"));
        }
        if fs.is_empty() {
            fs.push(WeightFunction::Adjacency);
            fs.extend(sombor_core::extremal::p_grid(&[1.0, 2.0, 3.0]));
        }
        check_pstar(&fs, a.max_n - 1)?;
        let r = sweep::run(cases, a.seed, a.min_n, a.max_n, &fs);
        let ok = r.violations.is_empty();
        let text = match a.format {
            Format::Json => json(&r),
            _ => format!(
                "seed {}  cases {}  n {}..{}  weightings {}\nchanged {}  unchanged {}  skipped {}  violations {}\n",
                r.seed,
                r.cases,
                r.min_n,
                r.max_n,
                r.weightings.join(" "),
                r.changed,
                r.unchanged,
                r.skipped,
                r.violations.len()
            ),
        };
        return Ok(Outcome { text, ok });
    }
    let g = read_graph(&a.input)?;
    let op = match (a.v1, a.v2, &a.op) {
        (Some(v1), Some(v2), None) => OpSpec::Kelmans { v1, v2 },
        (None, None, Some(spec)) => spec.parse()?,
        _ => return Err(usage("give --v1 and --v2, --op, or --sweep")),
    };
    if fs.is_empty() {
        fs.push(WeightFunction::psombor(2.0)?);
    }
    let mut reports = Vec::new();
    for f in &fs {
        reports.push(TransformReport {
            weighting: f.to_string(),
            outcome: verify_monotone(&g, op, f)?,
        });
    }
    Ok(Outcome::pass(match a.format {
        Format::Json => json(&reports),
        _ => reports
            .iter()
            .map(|r| {
                format!(
                    "{}  {}  changed {}  rho {} -> {}  result {}\n",
                    r.outcome.op,
                    r.weighting,
                    r.outcome.changed,
                    format_sig(r.outcome.rho_before),
                    format_sig(r.outcome.rho_after),
                    graph6::encode(&r.outcome.result)
                )
            })
            .collect(),
    }))
}

#[derive(Serialize)]
struct QuotientReport {
    certificate: Certificate,
    weighting: String,
    partition: Vec<Vec<usize>>,
    equitable: bool,
    #[serde(serialize_with = "sig_rows")]
    matrix: Vec<Vec<f64>>,
    /// Highest degree first; absent above order 6.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "sig_opt_vec")]
    char_poly: Option<Vec<f64>>,
    /// Exact coefficients for unit weights.
    #[serde(skip_serializing_if = "Option::is_none")]
    char_poly_exact: Option<Vec<String>>,
    #[serde(with = "numfmt::sig")]
    rho_quotient: f64,
    #[serde(with = "numfmt::sig")]
    rho: f64,
}

fn sig_rows<S: serde::Serializer>(rows: &[Vec<f64>], s: S) -> Result<S::Ok, S::Error> {
    let rounded: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| numfmt::round_sig(x)).collect())
        .collect();
    rounded.serialize(s)
}

fn sig_opt_vec<S: serde::Serializer>(v: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref()
        .map(|v| v.iter().map(|&x| numfmt::round_sig(x)).collect::<Vec<_>>())
        .serialize(s)
}

fn parse_partition(n: usize, spec: &str) -> Res<VertexPartition> {
    let blocks = spec
        .split('|')
        .map(|b| {
            b.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<usize>()
                        .map_err(|_| usage(format!("bad partition {spec:?}")))
                })
                .collect::<Res<Vec<_>>>()
        })
        .collect::<Res<Vec<_>>>()?;
    Ok(VertexPartition::new(n, blocks)?)
}

fn quotient_cmd(a: QuotientArgs) -> Res<Outcome> {
    no_csv(a.format, "quotient")?;
    let g = read_graph(&a.input)?;
    let f = weighting(&a.weighting)?;
    let part = match &a.partition {
        Some(spec) => parse_partition(g.order(), spec)?,
        None => coarsest_equitable(&g, &f)?,
    };
    let m: WeightedMatrix<f64> = weighted_adjacency(&g, &f)?;
    let q = quotient(&m, &part)?;
    let small = q.order() <= MAX_CHAR_POLY_ORDER;
    let poly = if small { Some(char_poly(&q)?) } else { None };
    let exact = if small && matches!(f, WeightFunction::Adjacency) {
        let qe = quotient(&WeightedMatrix::<Exact>::adjacency(&g), &part)?;
        Some(char_poly(&qe)?.iter().map(ToString::to_string).collect())
    } else {
        None
    };
    let rho_quotient = match &poly {
        Some(p) if q.equitable => largest_real_root(p).unwrap_or(f64::NAN),
        _ => q.spectral_radius()?,
    };
    let r = QuotientReport {
        certificate: canonical_certificate(&g),
        weighting: f.to_string(),
        partition: part.blocks().to_vec(),
        equitable: q.equitable,
        matrix: q.entries.clone(),
        char_poly: poly,
        char_poly_exact: exact,
        rho_quotient,
        rho: rho_of(&g, &f)?,
    };
    Ok(Outcome::pass(match a.format {
        Format::Json => json(&r),
        _ => {
            let mut out = format!(
                "certificate {}\nweighting {}\nequitable {}\npartition {}\n",
                r.certificate.as_str(),
                r.weighting,
                r.equitable,
                r.partition
                    .iter()
                    .map(|b| joined(b, ","))
                    .collect::<Vec<_>>()
                    .join(" | ")
            );
            for row in &r.matrix {
                let _ = writeln!(
                    out,
                    "  {}",
                    row.iter().map(|&x| format_sig(x)).collect::<Vec<_>>().join("  ")
                );
            }
            if let Some(p) = &r.char_poly {
                let _ = writeln!(
                    out,
                    "char poly {}",
                    p.iter().map(|&x| format_sig(x)).collect::<Vec<_>>().join(" ")
                );
            }
            if let Some(p) = &r.char_poly_exact {
                let _ = writeln!(out, "exact {}", p.join(" "));
            }
            let _ = writeln!(
                out,
                "rho quotient {}\nrho {}",
                format_sig(r.rho_quotient),
                format_sig(r.rho)
            );
            out
        }
    }))
}

fn render_graph(g: &Graph, format: GraphFormat, name: &str) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", graph6::encode(g)),
        GraphFormat::Json => format!("{}\n", graph_to_json(g)),
        GraphFormat::Dot => dot::to_dot(g, name, None),
    }
}

fn named_cmd(a: NamedArgs) -> Res<Outcome> {
    // catalog families: `U1:8`
    let catalog_id = a
        .spec
        .split_once(':')
        .and_then(|(id, n)| Some((id.parse::<FamilyId>().ok()?, n.trim().parse::<usize>().ok()?)));
    let g = match catalog_id {
        Some((id, n)) => {
            let mut catalog = load_catalog(&a.catalog)?;
            ensure_family(&mut catalog, id, n)?;
            save_catalog(&a.catalog, &catalog)?;
            catalog.graph(id.as_str(), n)?
        }
        None => sombor_core::graph::named::build(&a.spec)?,
    };
    Ok(Outcome::pass(render_graph(&g, a.format, &a.spec)))
}

fn export(a: ExportArgs) -> Res<Outcome> {
    let g = read_graph(&a.input)?;
    let f = a.weighting.as_deref().map(weighting).transpose()?;
    let text = dot::to_dot(&g, &a.name, f.as_ref());
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| usage(format!("writing {}: {e}", path.display())))?;
            Ok(Outcome::pass(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::pass(text)),
    }
}

fn finding_text(f: &Finding) -> String {
    match f {
        Finding::Unstable { n, occupants } => format!(
            "n {n}: occupant depends on the weighting: {}",
            occupants
                .iter()
                .map(|(w, c)| format!("{w}={}", c.as_str()))
                .collect::<Vec<_>>()
                .join(" ")
        ),
        Finding::Tie { n, weighting } => format!("n {n}: tie within tolerance under {weighting}"),
        Finding::ReferenceMismatch { n, expected, observed } => {
            format!(
                "n {n}: reconstruction {} but ranking gives {}",
                expected.as_str(),
                observed.as_str()
            )
        }
        Finding::CatalogConflict { n, stored, observed } => {
            format!(
                "n {n}: catalog holds {} but ranking gives {}",
                stored.as_str(),
                observed.as_str()
            )
        }
    }
}

fn discover(a: DiscoverArgs) -> Res<Outcome> {
    no_csv(a.format, "discover")?;
    let id: FamilyId = a.family.parse()?;
    let ns = orders(&a.n)?;
    let grid = grid(&a.p, &[])?;
    let grid = if grid.is_empty() { id.default_grid() } else { grid };
    let mut catalog = load_catalog(&a.catalog)?;
    let r: DiscoveryReport = discover_family(id, &ns, &grid, &mut catalog)?;
    save_catalog(&a.catalog, &catalog)?;
    let text = match a.format {
        Format::Json => json(&r),
        _ => {
            let mut out = format!(
                "{}  {}  weightings {}\n",
                r.family.as_str(),
                if r.stable { "stable" } else { "UNSTABLE" },
                r.weightings.join(" ")
            );
            for e in &r.entries {
                let _ = writeln!(
                    out,
                    "  n {:>2}  {}  degrees {}",
                    e.n,
                    e.certificate.as_str(),
                    joined(&e.degree_sequence, " ")
                );
            }
            for f in &r.findings {
                let _ = writeln!(out, "  finding: {}", finding_text(f));
            }
            out
        }
    };
    Ok(Outcome { text, ok: r.stable })
}
