//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::panic;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongmax::catalogue::{tardos_edge_points, TardosEdge};
use strongmax::finitelab::{
    gadget_lemma_row, minimum_edge_covers, maximum_matchings, strongly_maximal_matchings,
    strongly_minimal_edge_covers,
};
use strongmax::gadget::{phi1_map, phi2_map};
use strongmax::objects::{apply_witness, check, delta, CofiniteSet, ExplicitEdges, Presentation};
use strongmax::oracles::{improve, improve_edgecover_h2, improve_matching_h1, ORACLE_CONSTRUCTIONS};
use strongmax::sample::{self, small_hypergraph, SAMPLE_BOUND};
use strongmax::universe::{Construction, Edge, IntensionalHypergraph, Vertex};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

fn is_matching(s: &BTreeSet<Edge>) -> bool {
    let mut seen = BTreeSet::new();
    s.iter().flat_map(|e| e.iter()).all(|v| seen.insert(v.clone()))
}

fn covers(s: &BTreeSet<Edge>, target: &BTreeSet<Vertex>) -> bool {
    let covered: BTreeSet<&Vertex> = s.iter().flat_map(|e| e.iter()).collect();
    target.iter().all(|v| covered.contains(v))
}

fn subsets(edges: &[Edge]) -> impl Iterator<Item = BTreeSet<Edge>> + '_ {
    (0u32..1 << edges.len()).map(|m| (0..edges.len()).filter(|i| m & (1 << i) != 0).map(|i| edges[i].clone()).collect())
}

fn gadget_lemmas() -> Outcome {
    let started = Instant::now();
    for k in 2..=7u64 {
        let g = strongmax::gadget::Gadget::build(&Edge::nat_range(1, k).unwrap()).unwrap();
        let edges = g.edges();
        let added: BTreeSet<Vertex> = g.added_vertices().into_iter().collect();
        let matchings: Vec<_> = subsets(&edges).filter(is_matching).collect();
        let best = matchings.iter().map(BTreeSet::len).max().unwrap();
        let maxima: Vec<_> = matchings.iter().filter(|m| m.len() == best).collect();
        ensure(best as u64 == k && maxima == [&g.outer_set()], || format!("k = {k}: maximum matchings {maxima:?}"))?;
        let small: Vec<_> = subsets(&edges).filter(|s| s.len() as u64 == k - 1 && covers(s, &added)).collect();
        ensure(small == [g.inner_set()], || format!("k = {k}: (k-1)-edge covers {small:?}"))?;
        ensure(!subsets(&edges).any(|s| (s.len() as u64) < k - 1 && covers(&s, &added)), || format!("k = {k}: smaller cover"))?;
        ensure(gadget_lemma_row(k as usize).unwrap().holds, || format!("k = {k}: lab report disagrees"))?;
    }
    let secs = started.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.1}s"))?;
    Ok(format!("k = 2..7 in {secs:.2}s"))
}

fn uniformization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = [0usize; 2];
    for run in 0..500 {
        let b = rng.gen_range(2..=6);
        let edges = Construction::H1.edges_within(b).unwrap();
        let mut s = BTreeSet::new();
        for e in edges.choose_multiple(&mut rng, edges.len()) {
            if rng.gen_bool(0.5) && (run % 2 == 1 || s.iter().all(|f: &Edge| f.is_disjoint(e))) {
                s.insert(e.clone());
            }
        }
        let image: BTreeSet<Edge> = s.iter().map(|e| phi1_map(e).unwrap()).collect();
        ensure(image.iter().all(|e| Construction::H1Uniform.is_edge(e)), || "φ₁ left the padded hypergraph".into())?;
        ensure(is_matching(&s) == is_matching(&image), || format!("φ₁ on {s:?}"))?;
        checked[0] += 1;
    }
    for run in 0..500 {
        let b = rng.gen_range(2..=4);
        let edges = Construction::H2.edges_within(b).unwrap();
        let window: BTreeSet<Vertex> = Construction::H2.window(b).unwrap().into_iter().collect();
        let padded: BTreeSet<Vertex> = Construction::H2Uniform.window(b).unwrap().into_iter().collect();
        let mut c: BTreeSet<Edge> = edges.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        if run % 2 == 0 {
            for v in &window {
                if !covers(&c, &[v.clone()].into()) {
                    let through: Vec<&Edge> = edges.iter().filter(|e| e.contains(v)).collect();
                    c.insert((*through.choose(&mut rng).unwrap()).clone());
                }
            }
        }
        let image: BTreeSet<Edge> = c.iter().map(|e| phi2_map(e).unwrap()).collect();
        ensure(covers(&c, &window) == covers(&image, &padded), || format!("φ₂ on {c:?}"))?;
        checked[1] += 1;
    }
    Ok(format!("{} matching sets, {} cover sets", checked[0], checked[1]))
}

fn oracle_contract() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for c in ORACLE_CONSTRUCTIONS {
        for run in 0..100 {
            let p = sample::oracle_input(&mut rng, c);
            let w = improve(&p, SAMPLE_BOUND).map_err(|e| format!("{c} run {run}: {e}"))?.witness;
            ensure(w.is_strict() && w.direction() == p.kind().direction(), || format!("{c} run {run}: {:?}", w.delta()))?;
            let q = apply_witness(&p, &w, SAMPLE_BOUND).map_err(|e| format!("{c} run {run}: {e}"))?;
            check(&q, SAMPLE_BOUND).map_err(|e| format!("{c} run {run}: {e}"))?;
            ensure(delta(&p, &q).ok() == Some(w.delta()), || format!("{c} run {run}: delta mismatch"))?;
        }
    }
    let secs = started.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!("7 oracles x 100 inputs in {secs:.1}s"))
}

fn accounting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut exchanges = 0;
    for run in 0..200 {
        let m = sample::h1_matching(&mut rng);
        let imp = improve_matching_h1(&m, SAMPLE_BOUND).map_err(|e| e.to_string())?;
        if let Some(star) = imp.star {
            let base = star.added.len() as i64 - star.removed.len() as i64;
            ensure(imp.witness.gain() == base, || format!("h1 run {run}"))?;
            exchanges += 1;
        }
        let c = sample::h2_cover(&mut rng);
        let imp = improve_edgecover_h2(&c, SAMPLE_BOUND).map_err(|e| e.to_string())?;
        if let Some(star) = imp.star {
            let base = star.added.len() as i64 - star.removed.len() as i64;
            ensure(imp.witness.gain() == base, || format!("h2 run {run}"))?;
            exchanges += 1;
        }
    }
    Ok(format!("{exchanges} base exchanges matched exactly"))
}

fn iteration() -> Outcome {
    let e11 = TardosEdge::new(1, 1).unwrap().to_edge();
    let mut m = Presentation::Explicit(ExplicitEdges::new(Construction::Tardos, [e11]));
    for step in 1..=100 {
        let w = improve(&m, 16).map_err(|e| format!("tardos step {step}: {e}"))?.witness;
        ensure(w.delta() == (1, 2), || format!("tardos step {step}: delta {:?}", w.delta()))?;
        m = apply_witness(&m, &w, 16).map_err(|e| format!("tardos step {step}: {e}"))?;
        let Presentation::Explicit(x) = &m else { return Err("tardos matching is no longer explicit".into()) };
        let gammas: Vec<TardosEdge> = x.edges.iter().filter_map(TardosEdge::from_edge).collect();
        for (i, t) in gammas.iter().enumerate() {
            for u in &gammas[i + 1..] {
                ensure(t.is_disjoint(u), || format!("tardos step {step}: {t} meets {u}"))?;
                if t.size() + u.size() <= 4096 {
                    let (p, q) = (tardos_edge_points(t.x, t.y).unwrap(), tardos_edge_points(u.x, u.y).unwrap());
                    ensure(p.is_disjoint(&q), || format!("tardos step {step}: point sets of {t} and {u} meet"))?;
                }
            }
        }
    }
    let mut a = Presentation::Cofinite(CofiniteSet::new([3]));
    for step in 1..=50 {
        let w = improve(&a, 8).map_err(|e| format!("vertex cover step {step}: {e}"))?.witness;
        a = apply_witness(&a, &w, 8).map_err(|e| format!("vertex cover step {step}: {e}"))?;
    }
    Ok("100 tardos steps of (1,2), 50 vertex-cover steps".into())
}

fn finite_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for run in 0..200 {
        let n = rng.gen_range(1..=7);
        let mut h = small_hypergraph(&mut rng, n, 10);
        let edges = h.edges.clone();
        let all: Vec<BTreeSet<Edge>> = subsets(&edges).collect();
        let strong = |family: &[&BTreeSet<Edge>], max: bool| -> BTreeSet<BTreeSet<Edge>> {
            family
                .iter()
                .filter(|x| {
                    family.iter().all(|y| {
                        let (lost, won) = (x.difference(y).count(), y.difference(x).count());
                        if max { lost >= won } else { lost <= won }
                    })
                })
                .map(|x| (*x).clone())
                .collect()
        };
        let matchings: Vec<&BTreeSet<Edge>> = all.iter().filter(|s| is_matching(s)).collect();
        let expected = strong(&matchings, true);
        let ours: BTreeSet<_> = strongly_maximal_matchings(&h).unwrap().into_iter().collect();
        let maxima: BTreeSet<_> = maximum_matchings(&h).unwrap().into_iter().collect();
        ensure(expected == ours && ours == maxima, || format!("run {run}: matchings of {h:?}"))?;
        h.vertices = edges.iter().flat_map(|e| e.iter().cloned()).collect();
        if h.vertices.is_empty() {
            continue;
        }
        let cover_sets: Vec<&BTreeSet<Edge>> = all.iter().filter(|s| covers(s, &h.vertices)).collect();
        let expected = strong(&cover_sets, false);
        let ours: BTreeSet<_> = strongly_minimal_edge_covers(&h).unwrap().into_iter().collect();
        let minima: BTreeSet<_> = minimum_edge_covers(&h).unwrap().into_iter().collect();
        ensure(expected == ours && ours == minima, || format!("run {run}: covers of {h:?}"))?;
    }
    Ok("200 random hypergraphs agree".into())
}

fn gamma_exchange() -> Outcome {
    let g = |x, y| TardosEdge::new(x, y).unwrap().to_edge();
    let m = Presentation::Explicit(ExplicitEdges::new(Construction::Tardos, [g(1, 5), g(2, 3), g(3, 2), g(7, 5)]));
    let w = improve(&m, 16).map_err(|e| e.to_string())?.witness;
    let want = serde_json::json!({
        "direction": "maximize",
        "removed": [g(3, 2)],
        "added": [g(5, 7), g(6, 6)],
        "delta": [1, 2],
    });
    let got = serde_json::to_value(&w).unwrap();
    ensure(got == want, || format!("witness {got}"))?;
    Ok("remove e_{3,2}; add e_{5,7}, e_{6,6}".into())
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let seeds = [
        ("tardos", r#"{"variant":"explicit","construction":"tardos","edges":[[[1,1],[2,1]]]}"#, 6),
        ("vertexcover", r#"{"variant":"cofinite","construction":"vertexcover","complement":[3]}"#, 6),
        ("h2", r#"{"variant":"gadget_map","construction":"h2","base":{"outer_on":{"construction":"h2star","head":[],"tail":{"kind":"blocks","start":1,"size":2},"removed":[]}},"overrides":[]}"#, 3),
        ("h1star", r#"{"variant":"explicit","construction":"h1star","edges":[[3,4,5]]}"#, 3),
    ];
    for (tag, seed, steps) in seeds {
        let input = dir.path().join(format!("{tag}.json"));
        std::fs::write(&input, seed).unwrap();
        let mut outputs = Vec::new();
        for round in 0..3 {
            let final_path = dir.path().join(format!("{tag}-{round}.out.json"));
            let out = Command::new(env!("CARGO_BIN_EXE_strongmax"))
                .args(["demo", "--construction", tag, "--steps", &steps.to_string()])
                .arg("--input")
                .arg(&input)
                .arg("--output")
                .arg(&final_path)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(out.status.success(), || format!("{tag}: {}", String::from_utf8_lossy(&out.stderr)))?;
            outputs.push((out.stdout, std::fs::read(&final_path).unwrap()));
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{tag}: runs differ"))?;
    }
    Ok("4 constructions x 3 runs byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("gadget lemmas", gadget_lemmas),
        ("uniformization", uniformization),
        ("oracle contract", oracle_contract),
        ("accounting identities", accounting),
        ("iteration", iteration),
        ("finite reduction", finite_reduction),
        ("gamma exchange example", gamma_exchange),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({why})", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
