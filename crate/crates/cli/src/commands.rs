use std::collections::BTreeSet;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gvdlab_core::frameworks::bipartite::certify_bipartite_gvd;
use gvdlab_core::frameworks::ef::{Conclusion, EfFramework};
use gvdlab_core::frameworks::glicci::{glicci_checks, GlicciConclusion, GlicciOptions, GlicciReport};
use gvdlab_core::graph::Graph;
use gvdlab_core::groebner::{self, IdealHandle};
use gvdlab_core::gvd::{
    candidate_order, canonicalize, check_decomposition, cn_split_unchecked, replay, tensor_blocks, Engine, GvdCertificate,
    GvdOptions, Verdict,
};
use gvdlab_core::toric::toric_ideal;
use gvdlab_core::{Monomial, MonomialOrder, Polynomial, VariableId};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::SharedBudget;
use crate::certjson::{cert_file, parse_cert_file, unmixed_to_json, verdict_name, UnmixedJson};
use crate::formats::{
    graph_to_json, ideal_to_json, poly_to_json, polys_to_json, read_graph, read_ideal, GraphJson, IdealJson, PolyJson,
    TermJson,
};
use crate::{render, EXIT_INCONCLUSIVE, EXIT_NEGATIVE, EXIT_POSITIVE, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(name = "gvdlab", version, about = "Geometric vertex decomposition of toric ideals of graphs")]
pub struct Cli {
    /// Seed for every random choice (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for branch evaluation and sampling.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Stop the search after this many nodes.
    #[arg(long, global = true)]
    pub max_nodes: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Graph file; its toric ideal is used.
    #[arg(long, conflicts_with = "ideal")]
    pub graph: Option<PathBuf>,
    /// Ideal JSON file.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Universal Gröbner basis of the toric ideal of a graph.
    Toric {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Reduced Gröbner basis under a monomial order.
    Groebner {
        #[command(flatten)]
        input: Input,
        /// `lex`, `grevlex`, `lex(e2,e1,...)`, `ycompat(y;ORDER)`, `elim(v,w;ORDER)`, `block(O1;O2)`.
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Certify whether the toric ideal of a graph is geometrically vertex decomposable.
    Gvd {
        #[arg(long)]
        graph: PathBuf,
        /// Variable to try first: `y` at the root, or `PATH:y` with PATH a word in C and N.
        #[arg(long)]
        hint: Vec<String>,
    },
    /// Certify whether an ideal is geometrically vertex decomposable.
    GvdIdeal {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        hint: Vec<String>,
    },
    /// Link and deletion ideals with respect to one variable.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        var: String,
        /// A y-compatible order; lex with the variable largest by default.
        #[arg(long)]
        order: Option<String>,
    },
    /// Glue an even cycle onto an edge and check the toric ideal identity.
    Glue {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        edge: String,
        #[arg(long)]
        len: usize,
        /// Also certify the glued graph.
        #[arg(long)]
        certify: bool,
    },
    /// Certificate from path-ordered matchings, for bipartite graphs.
    BipartiteCert {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The tree of ideals I_{E,F} with statements (A), (B), (C).
    Framework {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Which glicci theorems have their hypotheses met.
    Glicci {
        #[arg(long)]
        graph: PathBuf,
        /// Random lex orders tried per Cohen-Macaulay search.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Sample random lex orders and count square-free initial ideals.
    SampleInit {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Re-verify a stored certificate.
    Replay {
        #[arg(long)]
        cert: PathBuf,
        /// Graph the certificate's ring comes from, for toric primality witnesses.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `argv`, whose first element is the program name.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_POSITIVE };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    budget: SharedBudget,
}

impl Ctx<'_> {
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.cli.seed);
        r.set_stream(stream);
        r
    }

    fn emit<T: Serialize>(&self, report: &T, text: impl FnOnce() -> String) -> Result<String> {
        Ok(match self.cli.format {
            Format::Json => serde_json::to_string_pretty(report)? + "\n",
            Format::Text => text(),
        })
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.cli.jobs.max(1)).build()?)
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, String)> {
    let ctx = Ctx { cli, budget: SharedBudget::from_env(cli.max_nodes)? };
    match &cli.command {
        Command::Toric { graph } => toric_cmd(&ctx, &read_graph(graph)?),
        Command::Groebner { input, order } => groebner_cmd(&ctx, input, order),
        Command::Gvd { graph, hint } => {
            let g = read_graph(graph)?;
            let opts = hinted(GvdOptions::default().with_graph(g.clone()), hint)?;
            gvd_cmd(&ctx, &toric_ideal(&g)?, opts, Some(&g))
        }
        Command::GvdIdeal { ideal, hint } => {
            let opts = hinted(GvdOptions::default(), hint)?;
            gvd_cmd(&ctx, &read_ideal(ideal)?, opts, None)
        }
        Command::Decompose { input, var, order } => decompose_cmd(&ctx, input, var, order.as_deref()),
        Command::Glue { graph, edge, len, certify } => glue_cmd(&ctx, &read_graph(graph)?, edge, *len, *certify),
        Command::BipartiteCert { graph } => {
            let g = read_graph(graph)?;
            let cert = certify_bipartite_gvd(&g)?;
            emit_cert(&ctx, &cert)
        }
        Command::Framework { graph } => framework_cmd(&ctx, &read_graph(graph)?),
        Command::Glicci { graph, samples } => glicci_cmd(&ctx, &read_graph(graph)?, *samples),
        Command::SampleInit { input, trials } => sample_cmd(&ctx, input, *trials),
        Command::Replay { cert, graph } => replay_cmd(&ctx, cert, graph.as_ref()),
    }
}

fn load_input(input: &Input) -> Result<(IdealHandle, Option<Graph>)> {
    match (&input.graph, &input.ideal) {
        (Some(g), None) => {
            let g = read_graph(g)?;
            Ok((toric_ideal(&g)?, Some(g)))
        }
        (None, Some(i)) => Ok((read_ideal(i)?, None)),
        _ => bail!("give exactly one of --graph and --ideal"),
    }
}

fn hinted(mut opts: GvdOptions, hints: &[String]) -> Result<GvdOptions> {
    for h in hints {
        let (path, var) = h.split_once(':').unwrap_or(("", h));
        if !path.chars().all(|c| c == 'C' || c == 'N') {
            bail!("hint path `{path}` must be a word in C and N");
        }
        opts = opts.with_hint(path, var.trim());
    }
    Ok(opts)
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Gvd => EXIT_POSITIVE,
        Verdict::NotGvd => EXIT_NEGATIVE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn polys_text(ps: &[Polynomial], i: &IdealHandle) -> String {
    render::polys(ps, i.ring())
}

fn toric_cmd(ctx: &Ctx, g: &Graph) -> Result<(i32, String)> {
    let i = toric_ideal(g)?;
    let out = ctx.emit(&ideal_to_json(&i), || polys_text(i.generators(), &i))?;
    Ok((EXIT_POSITIVE, out))
}

#[derive(Serialize)]
struct BasisReport {
    order: String,
    ring: Vec<String>,
    basis: Vec<PolyJson>,
    initial: Vec<Vec<TermJson>>,
    square_free_initial: bool,
}

fn groebner_cmd(ctx: &Ctx, input: &Input, order: &str) -> Result<(i32, String)> {
    let (i, _) = load_input(input)?;
    let ord = MonomialOrder::parse(i.ring(), order)?;
    let gb = i.basis(&ord)?;
    let ring = i.ring();
    let lead: Vec<Polynomial> = gb.leading_monomials().iter().cloned().map(Polynomial::monomial).collect();
    let report = BasisReport {
        order: ord.describe(ring),
        ring: ring.names().to_vec(),
        basis: polys_to_json(gb.elements(), ring),
        initial: lead.iter().map(|p| poly_to_json(p, ring)).collect(),
        square_free_initial: gb.leading_monomials().iter().all(Monomial::is_square_free),
    };
    let out = ctx.emit(&report, || format!("# {}\n{}", report.order, polys_text(gb.elements(), &i)))?;
    Ok((EXIT_POSITIVE, out))
}

fn emit_cert(ctx: &Ctx, cert: &GvdCertificate) -> Result<(i32, String)> {
    let out = ctx.emit(&cert_file(cert), || render::certificate(cert))?;
    Ok((verdict_code(cert.verdict()), out))
}

/// The search for `ideal`, with the root's branches spread over `--jobs` threads.
///
/// Branches are assembled in candidate order, so the certificate does not
/// depend on the number of threads.
pub fn certify(ideal: &IdealHandle, opts: &GvdOptions, budget: &SharedBudget, pool: Option<&rayon::ThreadPool>) -> Result<GvdCertificate> {
    let sequential = || -> Result<GvdCertificate> { Ok(Engine::new(opts.clone(), budget).certify(ideal)?) };
    let Some(pool) = pool else { return sequential() };
    let c = canonicalize(ideal)?;
    let hint = opts.hints.get("").and_then(|n| c.ring.var(n).ok());
    let trivial = c.ideal.is_unit()? || c.generators.iter().all(|g| g.as_variable().is_some());
    if trivial || (hint.is_none() && opts.tensor_split && tensor_blocks(&c.generators).len() > 1) {
        return sequential();
    }
    let mut vars: Vec<VariableId> = candidate_order(&c);
    if let Some(h) = hint {
        vars.retain(|&v| v != h);
        vars.insert(0, h);
    }
    let outcomes = pool.install(|| {
        vars.par_iter()
            .map(|&y| Ok(Engine::new(opts.clone(), budget).branch(&c, y, "")?))
            .collect::<Result<Vec<_>>>()
    })?;
    let node = Engine::new(opts.clone(), budget).assemble(&c, outcomes)?.node;
    Ok(GvdCertificate { ring: ideal.ring().clone(), node })
}

fn gvd_cmd(ctx: &Ctx, ideal: &IdealHandle, opts: GvdOptions, graph: Option<&Graph>) -> Result<(i32, String)> {
    if let Some(g) = graph {
        for var in opts.hints.values() {
            g.edge_index(var)?;
        }
    } else {
        for var in opts.hints.values() {
            ideal.ring().var(var)?;
        }
    }
    let pool = if ctx.cli.jobs > 1 { Some(ctx.pool()?) } else { None };
    let cert = certify(ideal, &opts, &ctx.budget, pool.as_ref())?;
    emit_cert(ctx, &cert)
}

#[derive(Serialize)]
struct SplitReport {
    y: String,
    order: String,
    square_free_in_y: bool,
    decomposition_holds: bool,
    degeneracy: Option<String>,
    in_y: IdealJson,
    #[serde(rename = "C")]
    c: IdealJson,
    #[serde(rename = "N")]
    n: IdealJson,
    c_unmixedness: UnmixedJson,
    n_unmixedness: UnmixedJson,
}

fn decompose_cmd(ctx: &Ctx, input: &Input, var: &str, order: Option<&str>) -> Result<(i32, String)> {
    let (i, g) = load_input(input)?;
    let y = i.ring().var(var)?;
    let ord = order.map(|o| MonomialOrder::parse(i.ring(), o)).transpose()?;
    let split = cn_split_unchecked(&i, y, ord)?;
    let check = if split.square_free_in_y { Some(check_decomposition(&split, g.as_ref())?) } else { None };
    let holds = check.is_some_and(|c| c.holds);
    let ev = |x: &IdealHandle| gvdlab_core::decomposition::unmixedness_evidence(x, g.as_ref());
    let report = SplitReport {
        y: var.into(),
        order: split.order.describe(i.ring()),
        square_free_in_y: split.square_free_in_y,
        decomposition_holds: holds,
        degeneracy: check.map(|c| crate::certjson::degeneracy_name(c.degeneracy).into()),
        in_y: ideal_to_json(&split.in_y),
        c: ideal_to_json(&split.c),
        n: ideal_to_json(&split.n),
        c_unmixedness: unmixed_to_json(&ev(&split.c)?),
        n_unmixedness: unmixed_to_json(&ev(&split.n)?),
    };
    let out = ctx.emit(&report, || {
        format!(
            "# y = {var}, order {}, square-free in y: {}, decomposition holds: {holds}\n# in_y\n{}# C\n{}# N\n{}",
            report.order,
            split.square_free_in_y,
            polys_text(split.in_y.generators(), &i),
            polys_text(split.c.generators(), &i),
            polys_text(split.n.generators(), &i)
        )
    })?;
    Ok((if holds { EXIT_POSITIVE } else { EXIT_NEGATIVE }, out))
}

#[derive(Serialize)]
struct GlueReport {
    graph: GraphJson,
    new_edges: Vec<String>,
    binomial: Vec<TermJson>,
    identity_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<crate::certjson::CertFile>,
}

fn glue_cmd(ctx: &Ctx, g: &Graph, edge: &str, len: usize, certify_it: bool) -> Result<(i32, String)> {
    let e = g.edge_index(edge)?;
    let glued = g.glue_even_cycle(e, len)?;
    let h = &glued.graph;
    let ring = h.ring()?;
    let base = groebner::extend(&toric_ideal(g)?, &ring)?;
    let mut gens = base.generators().to_vec();
    gens.push(glued.cycle_binomial.clone());
    let identity_holds = groebner::ideal_equal(&toric_ideal(h)?, &IdealHandle::new(ring.clone(), gens)?)?;
    let cert = if certify_it {
        let pool = if ctx.cli.jobs > 1 { Some(ctx.pool()?) } else { None };
        Some(certify(&toric_ideal(h)?, &GvdOptions::default().with_graph(h.clone()), &ctx.budget, pool.as_ref())?)
    } else {
        None
    };
    let report = GlueReport {
        graph: graph_to_json(h),
        new_edges: glued.new_edges.clone(),
        binomial: poly_to_json(&glued.cycle_binomial, &ring),
        identity_holds,
        certificate: cert.as_ref().map(cert_file),
    };
    let out = ctx.emit(&report, || {
        let mut s = String::new();
        for ed in h.edges() {
            s += &format!("{}: {} {}\n", ed.name, h.vertices()[ed.ends.0], h.vertices()[ed.ends.1]);
        }
        s += &format!("# F = {}\n# I_H = I_G + <F>: {identity_holds}\n", glued.cycle_binomial.to_string_in(&ring));
        if let Some(c) = &cert {
            s += &render::certificate(c);
        }
        s
    })?;
    let code = match (&cert, identity_holds) {
        (_, false) => EXIT_NEGATIVE,
        (Some(c), true) => verdict_code(c.verdict()),
        (None, true) => EXIT_POSITIVE,
    };
    Ok((code, out))
}

#[derive(Serialize)]
struct EfNodeJson {
    id: usize,
    #[serde(rename = "E")]
    e: Vec<String>,
    #[serde(rename = "F")]
    f: Vec<String>,
    binomials: Vec<PolyJson>,
    monomials: Vec<PolyJson>,
    groebner: bool,
    square_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    split: Option<EfSplitJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    leaf: Option<bool>,
    unmixedness: UnmixedJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    link: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deletion: Option<usize>,
}

#[derive(Serialize)]
struct EfSplitJson {
    y: String,
    holds: bool,
    c_matches: bool,
    n_matches: bool,
}

#[derive(Serialize)]
struct FrameworkReport {
    applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    statements: Option<Statements>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadratic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pipeline: Option<crate::certjson::CertFile>,
    nodes: Vec<EfNodeJson>,
}

#[derive(Serialize)]
struct Statements {
    #[serde(rename = "A")]
    a: bool,
    #[serde(rename = "B")]
    b: bool,
    #[serde(rename = "C")]
    c: String,
    conclusive: bool,
}

fn conclusion_name(c: Conclusion) -> &'static str {
    match c {
        Conclusion::Holds => "holds",
        Conclusion::Refuted => "refuted",
        Conclusion::Inconclusive => "inconclusive",
    }
}

fn framework_cmd(ctx: &Ctx, g: &Graph) -> Result<(i32, String)> {
    let fw = match EfFramework::new(g) {
        Ok(f) => f,
        Err(gvdlab_core::Error::Hypothesis(why)) => {
            let r = FrameworkReport {
                applicable: false,
                reason: Some(why.clone()),
                order: None,
                statements: None,
                quadratic: None,
                pipeline: None,
                nodes: Vec::new(),
            };
            return Ok((EXIT_NEGATIVE, ctx.emit(&r, || format!("not applicable: {why}\n"))?));
        }
        Err(e) => return Err(e.into()),
    };
    let ring = fw.ring();
    let abc = fw.check_statements()?;
    let names = |ix: &[usize]| ix.iter().map(|&i| g.edges()[i].name.clone()).collect::<Vec<_>>();
    let nodes: Vec<EfNodeJson> = abc
        .tree
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| EfNodeJson {
            id,
            e: names(&n.state.e),
            f: names(&n.state.f),
            binomials: polys_to_json(&n.state.binomials, ring),
            monomials: polys_to_json(&n.state.monomials, ring),
            groebner: n.checks.groebner,
            square_free: n.checks.square_free,
            split: n.checks.split.as_ref().map(|s| EfSplitJson {
                y: s.y.clone(),
                holds: s.holds,
                c_matches: s.c_matches,
                n_matches: s.n_matches,
            }),
            leaf: n.checks.leaf,
            unmixedness: unmixed_to_json(&n.checks.unmixedness),
            link: n.children.map(|c| c.0),
            deletion: n.children.map(|c| c.1),
        })
        .collect();
    let pipeline = if fw.is_quadratic() { Some(fw.quadratic_pipeline()?) } else { None };
    let report = FrameworkReport {
        applicable: true,
        reason: None,
        order: Some(fw.order().describe(ring)),
        statements: Some(Statements { a: abc.a, b: abc.b, c: conclusion_name(abc.c).into(), conclusive: abc.conclusive() }),
        quadratic: Some(fw.is_quadratic()),
        pipeline: pipeline.as_ref().map(cert_file),
        nodes,
    };
    let out = ctx.emit(&report, || {
        let mut s = format!("(A) {}  (B) {}  (C) {}\n", abc.a, abc.b, conclusion_name(abc.c));
        for (id, n) in abc.tree.nodes.iter().enumerate() {
            let depth = n.state.k();
            s += &format!(
                "{}#{id} E={:?} F={:?} gens={} unmixed={}\n",
                "  ".repeat(depth),
                names(&n.state.e),
                names(&n.state.f),
                n.state.natural_generators().len(),
                n.checks.unmixedness.tag()
            );
        }
        s
    })?;
    let code = if abc.conclusive() {
        EXIT_POSITIVE
    } else if !abc.a || !abc.b || abc.c == Conclusion::Refuted {
        EXIT_NEGATIVE
    } else {
        EXIT_INCONCLUSIVE
    };
    Ok((code, out))
}

#[derive(Serialize)]
struct GlicciJson {
    conclusion: String,
    fired: Vec<String>,
    checks: Vec<TheoremJson>,
}

#[derive(Serialize)]
struct TheoremJson {
    theorem: String,
    fires: bool,
    hypotheses: Vec<HypothesisJson>,
}

#[derive(Serialize)]
struct HypothesisJson {
    name: String,
    holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    informational: bool,
}

fn glicci_json(r: &GlicciReport) -> GlicciJson {
    GlicciJson {
        conclusion: r.conclusion.label().into(),
        fired: r.fired().into_iter().map(String::from).collect(),
        checks: r
            .checks
            .iter()
            .map(|c| TheoremJson {
                theorem: c.theorem.clone(),
                fires: c.fires,
                hypotheses: c
                    .hypotheses
                    .iter()
                    .map(|h| HypothesisJson {
                        name: h.name.clone(),
                        holds: h.holds,
                        witness: h.witness.clone(),
                        informational: h.informational,
                    })
                    .collect(),
            })
            .collect(),
    }
}

const GLICCI_STREAM: u64 = 1;
const SAMPLE_STREAM: u64 = 2;

fn glicci_cmd(ctx: &Ctx, g: &Graph, samples: usize) -> Result<(i32, String)> {
    let mut rng = ctx.rng(GLICCI_STREAM);
    let r = glicci_checks(g, GlicciOptions { lex_samples: samples }, &mut rng)?;
    let j = glicci_json(&r);
    let out = ctx.emit(&j, || {
        let mut s = format!("{}\n", j.conclusion);
        for c in &j.checks {
            s += &format!("[{}] {}\n", if c.fires { "fires" } else { "     " }, c.theorem);
            for h in &c.hypotheses {
                let v = match h.holds {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "unknown",
                };
                s += &format!("    {}: {v}{}\n", h.name, h.witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default());
            }
        }
        s
    })?;
    let code = match r.conclusion {
        GlicciConclusion::CertifiedByTheorem => EXIT_POSITIVE,
        GlicciConclusion::HypothesesNotMet => EXIT_NEGATIVE,
    };
    Ok((code, out))
}

#[derive(Serialize)]
struct SampleReport {
    seed: u64,
    trials: usize,
    distinct_initial_ideals: usize,
    square_free_hits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_square_free_order: Option<String>,
}

/// The random lex orders `sample-init` tries, as variable permutations.
pub fn sample_orders(vars: usize, trials: usize, seed: u64) -> Vec<Vec<VariableId>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(SAMPLE_STREAM);
    (0..trials)
        .map(|_| {
            let mut p: Vec<VariableId> = (0..vars as u32).map(VariableId).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect()
}

fn sample_cmd(ctx: &Ctx, input: &Input, trials: usize) -> Result<(i32, String)> {
    let (i, _) = load_input(input)?;
    let perms = sample_orders(i.ring().arity(), trials, ctx.cli.seed);
    let distinct: BTreeSet<&Vec<VariableId>> = perms.iter().collect();
    let distinct: Vec<&Vec<VariableId>> = distinct.into_iter().collect();
    let leads = ctx.pool()?.install(|| {
        distinct
            .par_iter()
            .map(|p| {
                let gb = i.basis(&MonomialOrder::Lex((*p).clone()))?;
                let mut m = gb.leading_monomials().to_vec();
                m.sort();
                Ok(((*p).clone(), m))
            })
            .collect::<Result<std::collections::BTreeMap<_, _>>>()
    })?;
    let mut ideals: BTreeSet<&Vec<Monomial>> = BTreeSet::new();
    let mut hits = 0;
    let mut first = None;
    for p in &perms {
        let m = &leads[p];
        ideals.insert(m);
        if m.iter().all(Monomial::is_square_free) {
            hits += 1;
            first.get_or_insert_with(|| MonomialOrder::Lex(p.clone()).describe(i.ring()));
        }
    }
    let report = SampleReport {
        seed: ctx.cli.seed,
        trials,
        distinct_initial_ideals: ideals.len(),
        square_free_hits: hits,
        first_square_free_order: first,
    };
    let out = ctx.emit(&report, || {
        format!(
            "{} random lex orders (seed {}): {} distinct initial ideals, {} square-free\n",
            trials, report.seed, report.distinct_initial_ideals, hits
        )
    })?;
    Ok((if hits > 0 { EXIT_POSITIVE } else { EXIT_NEGATIVE }, out))
}

#[derive(Serialize)]
struct ReplayJson {
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decompositions: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn replay_cmd(ctx: &Ctx, path: &PathBuf, graph: Option<&PathBuf>) -> Result<(i32, String)> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cert = parse_cert_file(&text)?;
    let g = graph.map(|p| read_graph(p)).transpose()?;
    let (code, j) = match replay(&cert, g.as_ref()) {
        Ok(r) => (
            EXIT_POSITIVE,
            ReplayJson {
                verified: true,
                verdict: Some(verdict_name(r.verdict).into()),
                nodes: Some(r.nodes),
                decompositions: Some(r.decompositions),
                error: None,
            },
        ),
        Err(e) => (EXIT_NEGATIVE, ReplayJson { verified: false, verdict: None, nodes: None, decompositions: None, error: Some(e.to_string()) }),
    };
    let out = ctx.emit(&j, || match &j.error {
        None => format!(
            "verified: {} ({} nodes, {} decompositions)\n",
            j.verdict.as_deref().unwrap_or("?"),
            j.nodes.unwrap_or(0),
            j.decompositions.unwrap_or(0)
        ),
        Some(e) => format!("rejected: {e}\n"),
    })?;
    Ok((code, out))
}
