//! Acceptance criteria 1–10, one PASS/FAIL line each.
//!
//! Every emitted embedding is re-checked here against raw line lists, not
//! through the library verifier. Criteria whose statement is contradicted by
//! an exhaustive search print FAIL with the counterexample; the run only
//! exits nonzero when a failure differs from that recorded counterexample.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use planegraph::cycles::{
    ag_cycle, base_path, certified_labeling, closed_form_return, cycle_q2, long_cycle, path_closed_form, pg_cycle,
    return_multiplier, singer_difference_set, CycleRoute,
};
use planegraph::gf::{gamma_map, gamma_prime_map, Field, FieldElement, RecordRoute};
use planegraph::graphs::{build_graph, Embedding, GraphSpec, PlaneModel};
use planegraph::oracle::{exists_embedding, OraclePlane, Verdict, DEFAULT_BUDGET};
use planegraph::plane::{ag_from_field, pg_from_field, LabelingKind, ProjectivePlane, SlopeLabeling};
use planegraph::wheelgear::{gear, wheel};
use planegraph::Error;

const CYCLE_ORDERS: [u64; 7] = [4, 5, 7, 8, 9, 11, 13];

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_powers(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi)
        .filter(|&n| {
            let Some(p) = (2..=n).find(|p| n % p == 0) else { return false };
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            m == 1
        })
        .collect()
}

/// Lines as point sets, with per-point incidence lists.
struct Lines {
    points: usize,
    lines: Vec<Vec<u32>>,
    through: Vec<Vec<usize>>,
}

impl Lines {
    fn pg(q: u64) -> Self {
        Self::new(pg_from_field(q).unwrap().lines, (q * q + q + 1) as usize)
    }

    fn ag(q: u64) -> Self {
        Self::new(ag_from_field(q).unwrap().to_generic().lines, (q * q) as usize)
    }

    fn new(lines: Vec<Vec<u32>>, points: usize) -> Self {
        let mut through = vec![Vec::new(); points];
        for (i, l) in lines.iter().enumerate() {
            for &p in l {
                through[p as usize].push(i);
            }
        }
        Lines { points, lines, through }
    }

    /// Distinct vertices inside the plane, each edge on exactly one line
    /// holding both ends, no line used twice.
    fn check(&self, e: &Embedding) -> Result<(), String> {
        let g = build_graph(&e.graph).map_err(|x| x.to_string())?;
        if e.vertex_map.len() != g.vertices {
            return Err("vertex count".into());
        }
        let distinct: BTreeSet<u32> = e.vertex_map.iter().copied().collect();
        if distinct.len() != g.vertices {
            return Err("repeated point".into());
        }
        if e.vertex_map.iter().any(|&p| p as usize >= self.points) {
            return Err("point outside the plane".into());
        }
        let mut used = BTreeSet::new();
        for &(a, b) in &g.edges {
            let (pa, pb) = (e.vertex_map[a as usize] as usize, e.vertex_map[b as usize] as usize);
            let common: Vec<usize> = self.through[pa].iter().filter(|l| self.through[pb].contains(l)).copied().collect();
            if common.len() != 1 {
                return Err(format!("edge ({a},{b}) on {} lines", common.len()));
            }
            if !used.insert(common[0]) {
                return Err(format!("line {:?} reused", self.lines[common[0]]));
            }
        }
        Ok(())
    }
}

struct Report {
    quiet: bool,
    lines: Vec<String>,
    unexpected: usize,
    artifacts: Vec<(String, String)>,
}

impl Report {
    fn record(&mut self, n: u32, ok: bool, detail: String, known_deviation: bool) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        let line = format!("criterion {n:>2}: {verdict}  {detail}");
        if !self.quiet {
            println!("{line}");
        }
        self.lines.push(line);
        if !ok && !known_deviation {
            self.unexpected += 1;
        }
    }
}

fn emb_json(e: &Embedding) -> String {
    e.to_json().unwrap()
}

/// Criterion 1: Hypothesis J certificates for every prime power up to 10^4.
fn hypothesis_j(r: &mut Report) {
    let lines = planegraph::cli::hypj_sweep(3, 10_000, false, 0).unwrap();
    let expected = prime_powers(3, 10_000);
    let mut bad = Vec::new();
    if lines.len() != expected.len() {
        bad.push(format!("{} records for {} prime powers", lines.len(), expected.len()));
    }
    for (line, &q) in lines.iter().zip(&expected) {
        let rec: planegraph::gf::CertificateRecord = serde_json::from_str(line).unwrap();
        let ok = if q == 3 {
            rec.route == RecordRoute::NotFound
        } else {
            rec.q == q && rec.route != RecordRoute::NotFound && certificate_holds(&rec)
        };
        if !ok {
            bad.push(format!("q = {q}: {line}"));
        }
    }
    let detail =
        format!("{} prime powers in [3, 10000], {} certificates, NOT_FOUND only at q=3", expected.len(), expected.len() - 1);
    r.artifacts.push(("hypj.jsonl".into(), lines.join("\n")));
    r.record(1, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

/// Re-derives a certificate. Prime fields use plain modular arithmetic.
fn certificate_holds(rec: &planegraph::gf::CertificateRecord) -> bool {
    let (q, a, g) = (rec.q, rec.alpha.unwrap(), rec.gamma.unwrap());
    if is_prime(q) {
        let m = |x: u64, y: u64| x * y % q;
        let pow = |mut b: u64, mut e: u64| {
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = m(acc, b);
                }
                b = m(b, b);
                e >>= 1;
            }
            acc
        };
        let inv = |x: u64| pow(x, q - 2);
        let primitive = |x: u64| x != 0 && (2..q).filter(|d| (q - 1) % d == 0 && is_prime(*d)).all(|d| pow(x, (q - 1) / d) != 1);
        let want = match rec.route {
            RecordRoute::OddGamma => m(q - a, inv(m((1 + q - a) % q, pow((1 + a) % q, 2)))),
            RecordRoute::BruteSmall => m((a + q - 1) % q, inv(pow((a + 1) % q, 3))),
            _ => return false,
        };
        return primitive(a) && primitive(g) && g == want && rec.ord == Some(q - 1);
    }
    let f = Field::with_order(q).unwrap();
    let (fa, fg) = (f.elem(a), f.elem(g));
    let want = match rec.route {
        RecordRoute::OddGamma => gamma_map(&f, fa),
        _ => gamma_prime_map(&f, fa),
    };
    want.ok() == Some(fg) && f.is_primitive(fa) && f.is_primitive(fg)
}

/// Criteria 2 and 3: every cycle length in AG(2,q) and PG(2,q).
fn pancyclic(r: &mut Report, projective: bool) {
    let mut bad = Vec::new();
    let mut count = 0;
    for q in std::iter::once(3).chain(CYCLE_ORDERS) {
        let (lines, max) = if projective { (Lines::pg(q), q * q + q + 1) } else { (Lines::ag(q), q * q) };
        for k in 3..=max {
            let c = if projective { pg_cycle(q, k) } else { ag_cycle(q, k) };
            match c {
                Ok(c) => {
                    let e = c.to_embedding();
                    let model = if projective { PlaneModel::Pg } else { PlaneModel::Ag };
                    if let Err(x) =
                        lines.check(&e).and_then(|_| if e.plane.model == model { Ok(()) } else { Err("plane model".into()) })
                    {
                        bad.push(format!("q={q} k={k}: {x}"));
                    }
                    if projective && k == max && q > 3 && c.route != CycleRoute::Singer {
                        bad.push(format!("q={q}: Hamiltonian cycle via {:?}", c.route));
                    }
                    r.artifacts.push((format!("{}{q}_c{k}.json", if projective { "pg" } else { "ag" }), emb_json(&e)));
                    count += 1;
                }
                Err(x) => bad.push(format!("q={q} k={k}: {x}")),
            }
        }
    }
    let name = if projective { "PG" } else { "AG" };
    let detail = format!("{count} cycles verified in {name}(2,q), q in {{3,4,5,7,8,9,11,13}}, every k");
    r.record(if projective { 3 } else { 2 }, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

fn element_order(f: &Field, x: FieldElement) -> u64 {
    let mut y = x;
    let mut n = 1;
    while y != FieldElement::ONE {
        y = f.mul(y, x);
        n += 1;
    }
    n
}

/// Criterion 4: long-cycle length law and the q² cycle.
fn long_cycles(r: &mut Report) {
    let mut bad = Vec::new();
    let qs = prime_powers(4, 49);
    for &q in &qs {
        let pg = ProjectivePlane::with_order(q).unwrap();
        let gamma = return_multiplier(&pg, &certified_labeling(&pg).unwrap()).unwrap();
        let ord = element_order(pg.field(), gamma);
        let c = long_cycle(q).unwrap();
        if c.len() as u64 != (q + 1) * ord || c.len() as u64 != q * q - 1 {
            bad.push(format!("q={q}: length {} vs (q+1)*{ord}", c.len()));
        }
        let full = cycle_q2(q).unwrap();
        let pts: BTreeSet<u32> = full.points.iter().copied().collect();
        if full.len() as u64 != q * q || pts != (0..(q * q) as u32).collect() {
            bad.push(format!("q={q}: q^2 cycle does not cover AG(2,q)"));
        }
        let lines = Lines::ag(q);
        for e in [c.to_embedding(), full.to_embedding()] {
            if let Err(x) = lines.check(&e) {
                bad.push(format!("q={q}: {x}"));
            }
        }
        r.artifacts.push((format!("long{q}.json"), emb_json(&c.to_embedding())));
    }
    let detail = format!("{} certified orders 4..49: |long| = (q+1) ord(gamma) = q^2-1, q^2-cycle covers AG(2,q)", qs.len());
    r.record(4, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

/// Criterion 5: geometric path against the corrected closed form.
fn closed_form(r: &mut Report) {
    let mut bad = Vec::new();
    let mut checked = 0u64;
    let qs: Vec<u64> = prime_powers(5, 49).into_iter().filter(|q| q % 2 == 1).collect();
    for &q in &qs {
        let pg = ProjectivePlane::with_order(q).unwrap();
        let f = pg.field();
        for alpha in f.primitive_iter().collect::<Vec<_>>() {
            let lab = SlopeLabeling::new(&pg, LabelingKind::A, alpha).unwrap();
            let gamma = gamma_map(f, alpha).unwrap();
            for beta in f.nonzero() {
                let path = base_path(&pg, &lab, beta).unwrap();
                for i in 0..=q {
                    checked += 1;
                    if path.points[i as usize] != path_closed_form(f, alpha, beta, i).unwrap() {
                        bad.push(format!("q={q} alpha={alpha} beta={beta} i={i}"));
                    }
                }
                let ret = path.return_point;
                if ret != closed_form_return(f, alpha, beta).unwrap() || !ret.x.is_zero() || ret.y != f.mul(gamma, beta) {
                    bad.push(format!("q={q} alpha={alpha} beta={beta}: return {ret:?}"));
                }
            }
        }
    }
    bad.truncate(5);
    let detail = format!(
        "{} odd orders 5..49, every primitive alpha and beta != 0: {checked} path points match, Q_0 = (0, gamma beta)",
        qs.len()
    );
    r.record(5, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

/// Criterion 6: wheels.
fn wheels(r: &mut Report) {
    let mut failures = Vec::new();
    let mut count = 0;
    let qs = prime_powers(2, 16);
    for &q in &qs {
        let lines = Lines::pg(q);
        for n in 3..=q + 1 {
            match wheel(q, n).map_err(|e| e.to_string()).and_then(|w| lines.check(&w.embedding).map(|_| w)) {
                Ok(w) => {
                    count += 1;
                    r.artifacts.push((format!("w{q}_{n}.json"), emb_json(&w.embedding)));
                }
                Err(x) => failures.push((q, n, x)),
            }
        }
        if !matches!(wheel(q, q + 2), Err(Error::ImpossibleDegree { .. })) {
            failures.push((q, q + 2, "W_{q+2} not refused".into()));
        }
    }
    // The plane of order 3 has no W_4; the oracle search is exhaustive.
    let proven = failures.len() == 1
        && failures[0].0 == 3
        && failures[0].1 == 4
        && exists_embedding(&build_graph(&GraphSpec::Wheel { n: 4 }).unwrap(), &OraclePlane::pg(3).unwrap(), DEFAULT_BUDGET)
            .verdict
            == Verdict::NotFound;
    let total: u64 = qs.iter().map(|q| q - 1).sum();
    let detail = if failures.is_empty() {
        format!("{count} wheels verified, W_(q+2) refused for every q")
    } else if proven {
        format!("{count}/{total} wheels verified, W_(q+2) refused; W_4 in PG(2,3) does not exist (exhaustive oracle: notfound), so the stated range is unattainable at q=3")
    } else {
        failures.iter().map(|(q, n, x)| format!("q={q} n={n}: {x}")).collect::<Vec<_>>().join("; ")
    };
    r.record(6, failures.is_empty(), detail, proven);
}

/// Criterion 7: gears for 5 ≤ q ≤ 16 and the small-case table.
fn gears(r: &mut Report) {
    let mut bad = Vec::new();
    let mut count = 0;
    for q in prime_powers(5, 16) {
        let lines = Lines::pg(q);
        for n in 3..=q + 1 {
            match gear(q, n).map_err(|e| e.to_string()).and_then(|g| lines.check(&g.embedding).map(|_| g)) {
                Ok(g) => {
                    count += 1;
                    r.artifacts.push((format!("g{q}_{n}.json"), emb_json(&g.embedding)));
                }
                Err(x) => bad.push(format!("q={q} n={n}: {x}")),
            }
        }
    }
    // Stated table: G_3 in pi_3; G_3, G_4, G_5 in pi_4; nothing in pi_2.
    let stated = |q: u64, n: u64| matches!((q, n), (3, 3) | (4, 3) | (4, 4) | (4, 5));
    let mut table = Vec::new();
    let mut mismatches = Vec::new();
    for q in 2..=4u64 {
        let plane = OraclePlane::pg(q).unwrap();
        let lines = Lines::pg(q);
        for n in 3..=q + 1 {
            let out = exists_embedding(&build_graph(&GraphSpec::Gear { n }).unwrap(), &plane, DEFAULT_BUDGET);
            if let Some(e) = &out.embedding {
                if let Err(x) = lines.check(e) {
                    bad.push(format!("oracle G_{n} in pi_{q}: {x}"));
                }
            }
            if out.verdict == Verdict::BudgetExceeded {
                bad.push(format!("oracle budget for G_{n} in pi_{q}"));
            }
            table.push(format!("G_{n}/pi_{q}:{}", serde_json::to_value(out.verdict).unwrap().as_str().unwrap()));
            if (out.verdict == Verdict::Found) != stated(q, n) {
                mismatches.push((q, n, out.verdict));
            }
        }
    }
    r.artifacts.push(("gear_table.txt".into(), table.join(" ")));
    let known = mismatches == [(3, 4, Verdict::Found)];
    let ok = bad.is_empty() && mismatches.is_empty();
    let detail = if ok {
        format!("{count} gears verified for 5 <= q <= 16; table {}", table.join(" "))
    } else if bad.is_empty() && known {
        format!(
            "{count} gears verified for 5 <= q <= 16; stated verdicts confirmed, but the table is not exact: G_4 also embeds in pi_3 (oracle embedding re-checked) [{}]",
            table.join(" ")
        )
    } else {
        format!("{}; table mismatches {mismatches:?}", bad.join("; "))
    };
    r.record(7, ok, detail, bad.is_empty() && known);
}

/// Criterion 8: constructions against the exhaustive oracle for q ≤ 4.
fn oracle_equivalence(r: &mut Report) {
    let mut bad = Vec::new();
    let mut claims = 0;
    let mut check = |plane: &OraclePlane, spec: GraphSpec, emitted: Option<Embedding>, lines: &Lines| {
        claims += 1;
        let out = exists_embedding(&build_graph(&spec).unwrap(), plane, DEFAULT_BUDGET);
        if out.verdict == Verdict::BudgetExceeded || (out.verdict == Verdict::Found) != emitted.is_some() {
            bad.push(format!("{spec} in {}: oracle {:?}, construction {}", plane.plane_ref, out.verdict, emitted.is_some()));
        }
        if let Some(e) = emitted {
            if let Err(x) = lines.check(&e) {
                bad.push(format!("{spec} in {}: {x}", plane.plane_ref));
            }
        }
    };
    for q in 2..=4u64 {
        let (ag, pg) = (OraclePlane::ag(q).unwrap(), OraclePlane::pg(q).unwrap());
        let (ag_lines, pg_lines) = (Lines::ag(q), Lines::pg(q));
        for k in 3..=q * q {
            check(&ag, GraphSpec::Cycle { k }, ag_cycle(q, k).ok().map(|c| c.to_embedding()), &ag_lines);
        }
        for k in 3..=q * q + q + 1 {
            check(&pg, GraphSpec::Cycle { k }, pg_cycle(q, k).ok().map(|c| c.to_embedding()), &pg_lines);
        }
        for n in 3..=q + 1 {
            check(&pg, GraphSpec::Wheel { n }, wheel(q, n).ok().map(|w| w.embedding), &pg_lines);
            check(&pg, GraphSpec::Gear { n }, gear(q, n).ok().map(|g| g.embedding), &pg_lines);
        }
    }
    let detail = format!("{claims} (graph, plane) pairs with q <= 4: construction emitted iff oracle found");
    r.record(8, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

/// Criterion 9: Singer difference sets.
fn singer(r: &mut Report) {
    let mut bad = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let n = q * q + q + 1;
        let d = singer_difference_set(q).unwrap();
        let mut hits = vec![0u32; n as usize];
        for &a in &d {
            for &b in &d {
                if a != b {
                    hits[((a + n - b) % n) as usize] += 1;
                }
            }
        }
        if d.len() as u64 != q + 1 || hits[1..].iter().any(|&h| h != 1) {
            bad.push(format!("q={q}: {d:?}"));
        }
        r.artifacts.push((format!("singer{q}.txt"), format!("{d:?}")));
    }
    let d2: BTreeSet<u64> = singer_difference_set(2).unwrap().into_iter().collect();
    if !(0..7).any(|s| [0u64, 1, 3].iter().map(|x| (x + s) % 7).collect::<BTreeSet<_>>() == d2) {
        bad.push(format!("q=2 set {d2:?} is not a shift of {{0,1,3}}"));
    }
    let detail = format!("q in {{2,3,4,5,7,8,9}}: every nonzero residue once; q=2 gives {d2:?}");
    r.record(9, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

fn run_all(r: &mut Report) {
    hypothesis_j(r);
    pancyclic(r, false);
    pancyclic(r, true);
    long_cycles(r);
    closed_form(r);
    wheels(r);
    gears(r);
    oracle_equivalence(r);
    singer(r);
}

/// Criterion 10: a second in-process run and two CLI runs give identical bytes.
fn determinism(r: &mut Report, first: &[(String, String)]) {
    let mut again = Report { quiet: true, lines: Vec::new(), unexpected: 0, artifacts: Vec::new() };
    run_all(&mut again);
    let mut bad = Vec::new();
    if again.lines != r.lines {
        bad.push("criterion verdicts differ between runs".into());
    }
    if again.artifacts.len() != first.len() {
        bad.push(format!("{} vs {} artifacts", again.artifacts.len(), first.len()));
    }
    for (a, b) in first.iter().zip(&again.artifacts) {
        if a != b {
            bad.push(format!("{} differs", a.0));
        }
    }
    if planegraph::cli::hypj_sweep(3, 2000, false, 1).unwrap() != planegraph::cli::hypj_sweep(3, 2000, false, 4).unwrap() {
        bad.push("hypj sweep depends on the worker count".into());
    }
    let bin = env!("CARGO_BIN_EXE_planegraph");
    let tmp = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for (run, jobs) in [("a", "1"), ("b", "3")] {
        let dir = tmp.path().join(run);
        let status = Command::new(bin)
            .args(["cycle", "sweep", "--q", "7", "--plane", "pg", "--jobs", jobs, "--out-dir"])
            .arg(&dir)
            .output()
            .unwrap();
        let certs = tmp.path().join(format!("{run}.jsonl"));
        let listed =
            Command::new(bin).args(["hypj", "sweep", "--max", "500", "--jobs", jobs, "--out"]).arg(&certs).output().unwrap();
        let mut files: Vec<(String, Vec<u8>)> = std::fs::read_dir(&dir)
            .unwrap()
            .map(|e| e.unwrap())
            .map(|e| (e.file_name().to_string_lossy().into_owned(), std::fs::read(e.path()).unwrap()))
            .collect();
        files.sort();
        files.push(("certs".into(), std::fs::read(&certs).unwrap()));
        outputs.push((status.stdout, listed.stdout, files));
    }
    if outputs[0] != outputs[1] {
        bad.push("CLI artifacts differ between runs".into());
    }
    let detail = format!("{} artifacts byte-identical across two runs; CLI cycle sweep (55 files) and certificate stream identical for 1 and 3 workers", first.len());
    r.record(10, bad.is_empty(), if bad.is_empty() { detail } else { bad.join("; ") }, false);
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut r = Report { quiet: false, lines: Vec::new(), unexpected: 0, artifacts: Vec::new() };
    run_all(&mut r);
    let first = std::mem::take(&mut r.artifacts);
    determinism(&mut r, &first);
    let fails = r.lines.iter().filter(|l| l.contains("FAIL")).count();
    println!(
        "acceptance: {} PASS, {fails} FAIL ({} unexplained) in {:.1}s",
        r.lines.len() - fails,
        r.unexpected,
        start.elapsed().as_secs_f64()
    );
    if r.unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
