//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Lines marked `FAIL (known)` are documented disagreements between the
//! expected value and what exact computation gives. For those the run
//! asserts the documented analysis instead, so a change in either direction
//! is caught.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use gvdlab::certjson::parse_cert_file;
use gvdlab::formats::graph_to_json;
use gvdlab_core::budget::Unlimited;
use gvdlab_core::frameworks::ef::EfFramework;
use gvdlab_core::frameworks::glicci::{FOUR_CYCLE, GAP_FREE, GLUING};
use gvdlab_core::graph::{families, Graph};
use gvdlab_core::groebner::{self, IdealHandle};
use gvdlab_core::gvd::{cn_split_unchecked, is_gvd, replay, CnSplit, GvdOptions, Verdict};
use gvdlab_core::{toric, MonomialOrder, Polynomial, RingContext};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

struct Report {
    failed: Vec<String>,
    out: std::io::Stdout,
}

impl Report {
    fn line(&mut self, s: &str) {
        let mut h = self.out.lock();
        let _ = writeln!(h, "{s}");
        let _ = h.flush();
    }

    fn check(&mut self, id: &str, what: &str, ok: bool) {
        self.line(&format!("{} [{id}] {what}", if ok { "PASS" } else { "FAIL" }));
        if !ok {
            self.failed.push(format!("[{id}] {what}"));
        }
    }

    /// A criterion whose expected value disagrees with exact computation.
    /// `analysis_holds` re-establishes the documented reason.
    fn known_red(&mut self, id: &str, what: &str, ok: bool, analysis: &str, analysis_holds: bool) {
        if ok {
            self.check(id, &format!("{what} (documented as red; now passes, revisit the analysis)"), false);
        } else {
            self.line(&format!("FAIL (known) [{id}] {what}\n      analysis: {analysis}"));
            self.check(id, &format!("analysis behind the red result: {analysis}"), analysis_holds);
        }
    }

    fn timed(&mut self, id: &str, start: Instant, limit: Duration) {
        let t = start.elapsed();
        self.check(id, &format!("runtime {:.2}s within {}s", t.as_secs_f64(), limit.as_secs()), t <= limit);
    }
}

fn scratch() -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write_graph(g: &Graph, name: &str) -> PathBuf {
    let p = scratch().join(name);
    std::fs::write(&p, serde_json::to_string_pretty(&graph_to_json(g)).unwrap()).unwrap();
    p
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_string_lossy().into_owned()
}

/// Runs the CLI; returns exit code and stdout.
fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["gvdlab"];
    argv.extend_from_slice(args);
    let o = gvdlab::run(argv);
    (o.code, o.stdout)
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or(Value::Null)
}

/// `gvd` then `replay` through the command line; the certified verdict if both agree.
fn cli_gvd(path: &Path, cmd: &str, flag: &str, tag: &str) -> Option<Verdict> {
    let p = path.to_string_lossy();
    let (code, out) = cli(&[cmd, flag, &p]);
    let cert = parse_cert_file(&out).ok()?;
    let cert_path = scratch().join(format!("{tag}.cert.json"));
    std::fs::write(&cert_path, &out).unwrap();
    let (rc, rout) = cli(&["replay", "--cert", &cert_path.to_string_lossy()]);
    let expected = match cert.verdict() {
        Verdict::Gvd => 0,
        Verdict::NotGvd => 1,
        Verdict::Inconclusive => 2,
    };
    (code == expected && rc == 0 && json(&rout)["verified"] == Value::Bool(true)).then(|| cert.verdict())
}

// Worked two-K4 example.

const GENERATORS: [&str; 13] = [
    "e8*e11-e7*e12",
    "e9*e10-e7*e12",
    "e2*e5-e1*e6",
    "e3*e4-e1*e6",
    "e4*e8*e9-e5*e6*e12",
    "e2*e8*e9-e3*e6*e12",
    "e1*e8*e9-e3*e5*e12",
    "e4*e7*e9-e5*e6*e11",
    "e2*e7*e9-e3*e6*e11",
    "e1*e7*e9-e3*e5*e11",
    "e4*e7*e8-e5*e6*e10",
    "e2*e7*e8-e3*e6*e10",
    "e1*e7*e8-e3*e5*e10",
];

const LEX_BASIS: [&str; 16] = [
    "e8*e11-e7*e12",
    "e9*e10-e7*e12",
    "e3*e4-e1*e6",
    "e4*e8*e9-e5*e6*e12",
    "e1*e8*e9-e3*e5*e12",
    "e4*e7*e9-e5*e6*e11",
    "e1*e7*e9-e3*e5*e11",
    "e4*e7*e8-e5*e6*e10",
    "e1*e7*e8-e3*e5*e10",
    "e5*e6*e10*e11-e4*e7^2*e12",
    "e3*e5*e10*e11-e1*e7^2*e12",
    "e2*e5-e1*e6",
    "e2*e8*e9-e3*e6*e12",
    "e2*e7*e9-e3*e6*e11",
    "e2*e7*e8-e3*e6*e10",
    "e2*e7^2*e12-e3*e6*e10*e11",
];

const C_E2: &[&str] = &["e5", "e8*e11-e7*e12", "e9*e10-e7*e12", "e8*e9", "e7*e9", "e7*e8", "e3*e4-e1*e6"];
const N_E2: &[&str] = &[
    "e8*e11-e7*e12",
    "e9*e10-e7*e12",
    "e3*e4-e1*e6",
    "e4*e8*e9-e5*e6*e12",
    "e1*e8*e9-e3*e5*e12",
    "e4*e7*e9-e5*e6*e11",
    "e1*e7*e9-e3*e5*e11",
    "e4*e7*e8-e5*e6*e10",
    "e1*e7*e8-e3*e5*e10",
];
const C_E8_J: &[&str] = &["e11", "e9", "e7", "e5", "e3*e4-e1*e6"];
const N_E8_J: &[&str] = &["e5", "e9*e10-e7*e12", "e7*e9", "e3*e4-e1*e6"];
const IN_E5_K: &[&str] = &[
    "e8*e11-e7*e12",
    "e9*e10-e7*e12",
    "e3*e4-e1*e6",
    "e5*e6*e12",
    "e3*e5*e12",
    "e5*e6*e11",
    "e3*e5*e11",
    "e5*e6*e10",
    "e3*e5*e10",
];
const C_E5_K: &[&str] =
    &["e6*e12", "e3*e12", "e8*e11-e7*e12", "e6*e11", "e3*e11", "e9*e10-e7*e12", "e6*e10", "e3*e10", "e3*e4-e1*e6"];
const IN_E12_L: &[&str] =
    &["e6*e11", "e3*e11", "e9*e10-e8*e11", "e6*e10", "e3*e10", "e3*e4-e1*e6", "e7*e12", "e6*e12", "e3*e12"];
const N_E12_L: &[&str] = &["e6*e11", "e3*e11", "e9*e10-e8*e11", "e6*e10", "e3*e10", "e3*e4-e1*e6"];
const C_E12_L: &[&str] = &["e7", "e6", "e3", "e9*e10-e8*e11"];
const IN_E11_M: &[&str] = &["e6*e10", "e3*e10", "e3*e4-e1*e6", "e8*e11", "e6*e11", "e3*e11"];
const N_E11_M: &[&str] = &["e6*e10", "e3*e10", "e3*e4-e1*e6"];
const C_E11_M: &[&str] = &["e8", "e6", "e3"];

fn criterion_1(r: &mut Report) {
    let start = Instant::now();
    let g = families::two_k4().unwrap();
    let ring = g.ring().unwrap();
    let ideal = |gens: &[&str]| IdealHandle::parse(&ring, gens).unwrap();
    let same = |a: &IdealHandle, b: &[&str]| groebner::ideal_equal(a, &ideal(b)).unwrap();
    let split = |i: &IdealHandle, y: &str| -> CnSplit { cn_split_unchecked(i, ring.var(y).unwrap(), None).unwrap() };

    let i_g = toric::toric_ideal(&g).unwrap();
    r.check("1", "two-K4 toric ideal equals the 13 displayed generators (exact)", same(&i_g, &GENERATORS));

    let listed: Vec<Polynomial> = LEX_BASIS.iter().map(|s| Polynomial::parse(&ring, s).unwrap()).collect();
    let monic_sorted = |ps: &[Polynomial], o: &MonomialOrder| {
        let mut v: Vec<Polynomial> = ps.iter().map(|p| p.monic(o).unwrap()).collect();
        v.sort();
        v
    };
    let lex = MonomialOrder::parse(&ring, "lex(e2,e1)").unwrap();
    let lex_gb = i_g.basis(&lex).unwrap();
    let lex_ok = monic_sorted(lex_gb.elements(), &lex) == monic_sorted(&listed, &lex);
    let yc = MonomialOrder::parse(&ring, "ycompat(e2;grevlex(e1))").unwrap();
    let yc_ok = monic_sorted(i_g.basis(&yc).unwrap().elements(), &yc) == monic_sorted(&listed, &yc);
    r.known_red(
        "1",
        "reduced basis under lex e2>e1>e3>...>e12 equals the 16 displayed elements (exact)",
        lex_ok,
        "the listing is not a Groebner basis under that lex order (e8e11-e7e12 and e9e10-e7e12 share the lead e7e12); \
         it is exactly the reduced basis under e2-degree first, then grevlex e1>e3>...>e12",
        !groebner::is_groebner_basis(&listed, &lex) && yc_ok && same(&i_g, &LEX_BASIS),
    );

    let j = ideal(C_E2);
    let k = ideal(N_E2);
    let l = ideal(C_E5_K);
    let m = ideal(N_E12_L);
    let s2 = split(&i_g, "e2");
    let s8 = split(&j, "e8");
    let s5 = split(&k, "e5");
    let s12 = split(&l, "e12");
    let s11 = split(&m, "e11");
    let rows: [(&str, &IdealHandle, &[&str]); 12] = [
        ("C_{e2}(I_G)", &s2.c, C_E2),
        ("N_{e2}(I_G)", &s2.n, N_E2),
        ("C_{e8}(J)", &s8.c, C_E8_J),
        ("N_{e8}(J)", &s8.n, N_E8_J),
        ("in_{e5}(K)", &s5.in_y, IN_E5_K),
        ("C_{e5}(K)", &s5.c, C_E5_K),
        ("in_{e12}(L)", &s12.in_y, IN_E12_L),
        ("N_{e12}(L)", &s12.n, N_E12_L),
        ("C_{e12}(L)", &s12.c, C_E12_L),
        ("in_{e11}(M)", &s11.in_y, IN_E11_M),
        ("N_{e11}(M)", &s11.n, N_E11_M),
        ("C_{e11}(M)", &s11.c, C_E11_M),
    ];
    for (name, got, want) in rows {
        r.check("1", &format!("{name} equals the displayed ideal (exact)"), same(got, want));
    }

    let path = fixture("twoK4.json");
    let (code, out) = cli(&["gvd", "--graph", &path]);
    let verdict = parse_cert_file(&out).map(|c| c.verdict()).ok();
    let p = |s: &str| Polynomial::parse(&ring, s).unwrap();
    let non_radical = j.contains(&p("e7^2*e12^2")).unwrap() && !j.contains(&p("e7*e12")).unwrap();
    r.known_red(
        "1",
        "`gvd --graph twoK4.json` returns certified-GVD (exit 0)",
        code == 0 && verdict == Some(Verdict::Gvd),
        "the displayed link C_{e2} contains (e7e12)^2 but not e7e12, so it is not radical and cannot be \
         geometrically vertex decomposable; the exhaustive search certifies NotGvd (exit 1) and the certificate replays",
        code == 1 && verdict == Some(Verdict::NotGvd) && non_radical && cli_gvd(Path::new(&path), "gvd", "--graph", "twoK4") == Some(Verdict::NotGvd),
    );
    r.timed("1", start, Duration::from_secs(60));
}

fn criterion_2(r: &mut Report) {
    let start = Instant::now();
    let v = cli_gvd(Path::new(&fixture("fig6.json")), "gvd-ideal", "--ideal", "fig6");
    r.check("2", "<e1e4^2e6e7 - e2e3e5^2e8> is certified NotGvd, exit 1, certificate replays (exact)", v == Some(Verdict::NotGvd));
    r.timed("2", start, Duration::from_secs(10));
}

fn g_rd_closed_form(r: usize, d: usize) -> BTreeSet<Polynomial> {
    let g = families::g_rd(r, d).unwrap();
    let ring = g.ring().unwrap();
    let p = |s: String| Polynomial::parse(&ring, &s).unwrap();
    let mut out = BTreeSet::new();
    for i in 1..=d {
        for j in i + 1..=d {
            out.insert(p(format!("a{i}*b{j}-b{i}*a{j}")));
        }
        let evens: Vec<String> = (1..r).map(|k| format!("e{}", 2 * k)).collect();
        let odds: Vec<String> = (1..r).map(|k| format!("e{}", 2 * k - 1)).collect();
        out.insert(p(format!("a{i}*{}-b{i}*{}", evens.join("*"), odds.join("*"))));
    }
    out
}

fn sign_normal(p: &Polynomial) -> Polynomial {
    if p.terms()[0].coeff < gvdlab_core::poly::coeff(0) {
        p.neg()
    } else {
        p.clone()
    }
}

fn criterion_3(r: &mut Report) {
    let start = Instant::now();
    let named: Vec<(&str, Graph)> = vec![
        ("C4", families::cycle(4).unwrap()),
        ("C6", families::cycle(6).unwrap()),
        ("C8", families::cycle(8).unwrap()),
        ("K_{2,3}", families::complete_bipartite(2, 3).unwrap()),
        ("K_{3,3}", families::complete_bipartite(3, 3).unwrap()),
        ("Ferrers (5,3,2,1)", families::ferrers(&[5, 3, 2, 1]).unwrap()),
        ("G_{3,2}", families::g_rd(3, 2).unwrap()),
        ("G_{3,5}", families::g_rd(3, 5).unwrap()),
    ];
    for (name, g) in &named {
        let path = write_graph(g, &format!("family-{}.json", name.replace([' ', '{', '}', ',', '(', ')'], "")));
        let generic = cli_gvd(&path, "gvd", "--graph", &format!("gvd-{}", path.file_stem().unwrap().to_string_lossy()));
        if g.is_bipartite() {
            let bip = cli_gvd(&path, "bipartite-cert", "--graph", &format!("bip-{}", path.file_stem().unwrap().to_string_lossy()));
            r.check(
                "3",
                &format!("{name}: certified GVD by bipartite-cert and by generic gvd, both replay (exact)"),
                bip == Some(Verdict::Gvd) && generic == Some(Verdict::Gvd),
            );
        } else {
            r.check("3", &format!("{name}: certified GVD by generic gvd, replays (exact)"), generic == Some(Verdict::Gvd));
        }
    }
    for (rr, d) in [(3, 2), (3, 5)] {
        let g = families::g_rd(rr, d).unwrap();
        let got: BTreeSet<Polynomial> =
            toric::universal_groebner_basis(&g).unwrap().iter().map(|u| sign_normal(&u.binomial)).collect();
        let want: BTreeSet<Polynomial> = g_rd_closed_form(rr, d).iter().map(sign_normal).collect();
        r.check("3", &format!("G_{{{rr},{d}}} universal basis equals the closed form (exact)"), got == want);
    }
    r.timed("3", start, Duration::from_secs(300));
}

fn criterion_4(r: &mut Report) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut g = families::cycle(4).unwrap();
    for step in 1..=5 {
        let edge = g.edges().choose(&mut rng).unwrap().name.clone();
        let len = *[4usize, 6].choose(&mut rng).unwrap();
        let path = write_graph(&g, &format!("glue-{step}.json"));
        let (code, out) = cli(&["glue", "--graph", &path.to_string_lossy(), "--edge", &edge, "--len", &len.to_string(), "--certify"]);
        let v = json(&out);
        let cert_ok = parse_cert_file(&serde_json::to_string(&v["certificate"]).unwrap())
            .map(|c| c.verdict() == Verdict::Gvd && replay(&c, None).is_ok())
            .unwrap_or(false);
        let next = gvdlab::formats::graph_from_json(&serde_json::from_value(v["graph"].clone()).unwrap()).unwrap();
        r.check(
            "4",
            &format!(
                "gluing {step}: C{len} along {edge} ({} edges): I_H = I_G + <F> and H certified GVD (exact)",
                next.num_edges()
            ),
            code == 0 && v["identity_holds"] == Value::Bool(true) && cert_ok,
        );
        g = next;
    }
    r.timed("4", start, Duration::from_secs(120));
}

/// Simple cycles as closed vertex sequences, each once.
fn simple_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.num_vertices() {
        extend(g, s, &mut vec![s], &mut out);
    }
    out
}

fn rotate_to(c: &[usize], v: usize) -> Vec<usize> {
    let i = c.iter().position(|&x| x == v).unwrap();
    c[i..].iter().chain(&c[..i]).copied().collect()
}

/// Vertex walk `v0 v1 ... v0` to its alternating edge vector.
fn walk_vector(g: &Graph, walk: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; g.num_edges()];
    for (i, w) in walk.windows(2).enumerate() {
        let e = g.edge_between(w[0], w[1]).unwrap();
        v[e] += if i % 2 == 0 { 1 } else { -1 };
    }
    if let Some(&x) = v.iter().find(|&&x| x != 0) {
        if x < 0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    v
}

fn paths_avoiding(g: &Graph, from: usize, to: usize, avoid: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    fn go(g: &Graph, to: usize, avoid: &BTreeSet<usize>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == to {
                let mut p = path.clone();
                p.push(w);
                out.push(p);
            } else if !avoid.contains(&w) && !path.contains(&w) {
                path.push(w);
                go(g, to, avoid, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, to, avoid, &mut vec![from], &mut out);
    out
}

/// Primitive even closed walks: even cycles, two odd cycles meeting in one
/// vertex, and two disjoint odd cycles joined by a path.
fn walk_universal(g: &Graph) -> BTreeSet<Vec<i64>> {
    let cycles = simple_cycles(g);
    let mut out = BTreeSet::new();
    let closed = |c: &[usize]| c.iter().chain(&c[..1]).copied().collect::<Vec<_>>();
    for c in &cycles {
        if c.len() % 2 == 0 {
            out.insert(walk_vector(g, &closed(c)));
        }
    }
    let odd: Vec<&Vec<usize>> = cycles.iter().filter(|c| c.len() % 2 == 1).collect();
    for (i, a) in odd.iter().enumerate() {
        for b in &odd[i + 1..] {
            let sa: BTreeSet<usize> = a.iter().copied().collect();
            let sb: BTreeSet<usize> = b.iter().copied().collect();
            let common: Vec<usize> = sa.intersection(&sb).copied().collect();
            match common.len() {
                1 => {
                    let v = common[0];
                    let mut w = closed(&rotate_to(a, v));
                    w.extend(closed(&rotate_to(b, v)).into_iter().skip(1));
                    out.insert(walk_vector(g, &w));
                }
                0 => {
                    let avoid: BTreeSet<usize> = sa.union(&sb).copied().collect();
                    for &u in a.iter() {
                        for &t in b.iter() {
                            for p in paths_avoiding(g, u, t, &avoid) {
                                let mut w = closed(&rotate_to(a, u));
                                w.extend(p.iter().skip(1));
                                w.extend(closed(&rotate_to(b, t)).into_iter().skip(1));
                                w.extend(p.iter().rev().skip(1));
                                out.insert(walk_vector(g, &w));
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    out
}

fn normal_vector(v: &[i64]) -> Vec<i64> {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => v.iter().map(|x| -x).collect(),
        _ => v.to_vec(),
    }
}

fn criterion_5(r: &mut Report, corpus: &[Graph]) {
    let start = Instant::now();
    let (mut u_ok, mut n_ok, mut d_ok) = (0, 0, 0);
    let mut edges_checked = 0;
    let mut first_bad: Option<String> = None;
    for g in corpus {
        let completion: BTreeSet<Vec<i64>> =
            toric::universal_groebner_basis(g).unwrap().iter().map(|u| normal_vector(&u.vector)).collect();
        if completion == walk_universal(g) {
            u_ok += 1;
        } else {
            first_bad.get_or_insert_with(|| format!("{:?}", g.edges()));
        }
        let i_g = toric::toric_ideal(g).unwrap();
        let mut all = true;
        for (k, e) in g.edges().iter().enumerate() {
            edges_checked += 1;
            let s = cn_split_unchecked(&i_g, i_g.ring().var(&e.name).unwrap(), None).unwrap();
            let (small, _, n) = s.contracted();
            let del = g.without_edges(&[k]);
            let want = groebner::extend(&toric::toric_ideal(&del).unwrap(), &small).unwrap();
            all &= groebner::ideal_equal(&n, &want).unwrap();
        }
        n_ok += all as usize;
        let expected = g.num_vertices() - usize::from(g.is_bipartite());
        let dim = groebner::krull_dimension(&i_g).unwrap();
        d_ok += (toric::toric_dimension(g) == dim && dim == expected) as usize;
    }
    let n = corpus.len();
    r.check(
        "5",
        &format!("completion universal basis equals walk enumeration on {u_ok}/{n} connected graphs with <= 7 edges (exact)"),
        u_ok == n,
    );
    if let Some(b) = first_bad {
        r.line(&format!("      first mismatch: {b}"));
    }
    r.check("5", &format!("N_y(I_G) contracts to I_(G minus y) for all {edges_checked} edges ({n_ok}/{n} graphs, exact)"), n_ok == n);
    r.check(
        "5",
        &format!("toric_dimension = krull_dimension = |V| - [bipartite] on {d_ok}/{n} graphs (exact)"),
        d_ok == n,
    );
    r.timed("5", start, Duration::from_secs(600));
}

fn generic_verdict(g: &Graph) -> Verdict {
    let opts = GvdOptions::default().with_graph(g.clone());
    is_gvd(&toric::toric_ideal(g).unwrap(), opts, &Unlimited).unwrap().verdict()
}

fn criterion_6(r: &mut Report, corpus: &[Graph]) {
    let start = Instant::now();
    let (mut total, mut ok) = (0, 0);
    for g in corpus {
        let u = toric::universal_groebner_basis(g).unwrap();
        if u.is_empty() || !u.iter().all(|b| b.binomial.total_degree() == 2) {
            continue;
        }
        total += 1;
        let good = EfFramework::new(g).and_then(|f| f.quadratic_pipeline()).is_ok_and(|c| {
            c.verdict() == Verdict::Gvd && replay(&c, Some(g)).is_ok()
        }) && generic_verdict(g) == Verdict::Gvd;
        ok += good as usize;
    }
    r.check(
        "6",
        &format!("quadratic pipeline certifies GVD and agrees with generic gvd on {ok}/{total} all-quadratic corpus graphs (exact)"),
        total > 0 && ok == total,
    );
    r.timed("6", start, Duration::from_secs(600));
}

fn criterion_7(r: &mut Report, corpus: &[Graph]) {
    let start = Instant::now();
    let eligible: Vec<&Graph> = corpus
        .iter()
        .filter(|g| g.num_edges() >= 4 && !toric::universal_groebner_basis(g).unwrap().is_empty())
        .filter(|g| EfFramework::new(g).is_ok())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut picks: Vec<&Graph> = eligible.choose_multiple(&mut rng, 10).copied().collect();
    picks.shuffle(&mut rng);
    let (mut nodes, mut t67_1, mut t67_4, mut t69, mut leaves, mut splits) = (0, 0, 0, 0, 0, 0);
    for g in &picks {
        let tree = EfFramework::new(g).unwrap().tree(g.num_edges()).unwrap();
        for n in &tree.nodes {
            nodes += 1;
            t67_1 += (n.checks.groebner && n.checks.square_free) as usize;
            if let Some(s) = &n.checks.split {
                splits += 1;
                t67_4 += (s.holds && s.c_matches && s.n_matches) as usize;
            }
            if let Some(l) = n.checks.leaf {
                leaves += 1;
                t69 += l as usize;
            }
        }
    }
    r.check("7", &format!("{} seeded graphs with square-free lex degeneration drawn from {}", picks.len(), eligible.len()), picks.len() == 10);
    r.check("7", &format!("natural generators form a Groebner basis with square-free initial ideal at {t67_1}/{nodes} nodes (exact)"), t67_1 == nodes);
    r.check("7", &format!("link and deletion equal the child ideals at {t67_4}/{splits} splits (exact)"), t67_4 == splits && splits > 0);
    r.check("7", &format!("full-depth leaves are <0> or <1> at {t69}/{leaves} leaves (exact)"), t69 == leaves && leaves > 0);
    r.timed("7", start, Duration::from_secs(600));
}

fn criterion_8(r: &mut Report) {
    let start = Instant::now();
    let (code, out) = cli(&["--seed", "42", "--jobs", "4", "sample-init", "--graph", &fixture("twoK4.json"), "--trials", "1000"]);
    let v = json(&out);
    r.check(
        "8",
        &format!(
            "substitute: 1000 seeded random lex orders (seed 42) give {} square-free initial ideals among {} distinct, expected 0 (exact)",
            v["square_free_hits"], v["distinct_initial_ideals"]
        ),
        code == 1 && v["trials"] == 1000 && v["square_free_hits"] == 0,
    );
    let (_, again) = cli(&["--seed", "42", "sample-init", "--graph", &fixture("twoK4.json"), "--trials", "1000"]);
    r.check("8", "sample-init output is byte-identical for --jobs 1 and --jobs 4", again == out);
    r.line("      not reproduced: the count of 1350 distinct initial ideals needs a Groebner fan traversal");
    r.timed("8", start, Duration::from_secs(1800));
}

fn fired(path: &str) -> (i32, Vec<String>) {
    let (code, out) = cli(&["--seed", "9", "glicci", "--graph", path]);
    let v = json(&out);
    let f = v["fired"].as_array().map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect()).unwrap_or_default();
    (code, f)
}

fn criterion_9(r: &mut Report) {
    let start = Instant::now();
    let (c, f) = fired(&fixture("k4.txt"));
    r.check("9", &format!("K4 fires the gap-free theorem (fired: {f:?})"), c == 0 && f.iter().any(|t| t == GAP_FREE));
    let mut g = families::cycle(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..2 {
        let e = rng.random_range(0..g.num_edges());
        g = g.glue_even_cycle(e, 4).unwrap().graph;
    }
    let p = write_graph(&g, "glued-c4-chain.json");
    let (c, f) = fired(&p.to_string_lossy());
    r.check("9", &format!("glued C4 chain ({} edges) fires the gluing theorem (fired: {f:?})", g.num_edges()), c == 0 && f.iter().any(|t| t == GLUING));
    let (c, f) = fired(&fixture("two_k2.txt"));
    r.check("9", &format!("2K2 fires nothing (fired: {f:?})"), c == 1 && f.is_empty());
    let _ = FOUR_CYCLE;
    r.timed("9", start, Duration::from_secs(120));
}

fn main() {
    let mut r = Report { failed: Vec::new(), out: std::io::stdout() };
    let corpus = families::connected_graphs(7).unwrap();
    r.line(&format!("acceptance: {} connected graphs with at most 7 edges in the corpus", corpus.len()));
    let _ = RingContext::new(["x"]);
    criterion_1(&mut r);
    criterion_2(&mut r);
    criterion_3(&mut r);
    criterion_4(&mut r);
    criterion_5(&mut r, &corpus);
    criterion_6(&mut r, &corpus);
    criterion_7(&mut r, &corpus);
    criterion_8(&mut r);
    criterion_9(&mut r);
    if r.failed.is_empty() {
        r.line("acceptance: all criteria pass or match their documented analysis");
    } else {
        r.line(&format!("acceptance: {} failing lines", r.failed.len()));
        for f in std::mem::take(&mut r.failed) {
            r.line(&format!("  {f}"));
        }
        std::process::exit(1);
    }
}
