//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use planiso::corpus::{
    enumerate_small_3conn_planar, gen_triangulation, named, oracle_colored_iso, oracle_iso,
    random_permutation,
};
use planiso::format::parse_graph_file;
use planiso::iso::{colored_isomorphism, isomorphic_embedded, isomorphic_with};
use planiso::regularize::color_respecting_iso_check;
use planiso::uxs::{provide_sequence, provide_sequence_with_length, verify_uxs_report, walk};
use planiso::{
    embed_planar, euler_verify, isomorphic, regularize, trace_faces, verify_mapping, DirectedEdge, EdgeColor,
    ExplorationSequence, Graph, IsoOptions,
};

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn corpus() -> Vec<(usize, Vec<Graph>)> {
    (4..=8)
        .map(|n| (n, enumerate_small_3conn_planar(n).expect("enumeration")))
        .collect()
}

fn relabeled(g: &Graph, seed: u64) -> Graph {
    g.relabel(&random_permutation(g.n(), seed)).unwrap()
}

fn completeness() -> Outcome {
    let failures: Vec<String> = (0..100u64)
        .into_par_iter()
        .filter_map(|i| {
            let n = 4 + (i as usize * 56) / 99;
            let g = gen_triangulation(n, i);
            let h = relabeled(&g, 1000 + i);
            match isomorphic(&g, &h, i) {
                Ok(r)
                    if r.mapping
                        .as_ref()
                        .is_some_and(|m| r.is_isomorphic() && verify_mapping(&g, &h, m)) =>
                {
                    None
                }
                other => Some(format!("n={n} seed={i}: {other:?}")),
            }
        })
        .collect();
    if failures.is_empty() {
        Ok("100 triangulations, 4 <= n <= 60".into())
    } else {
        Err(failures.join("; "))
    }
}

fn soundness(corpus: &[(usize, Vec<Graph>)]) -> Outcome {
    let mut pairs = 0;
    let mut disagreements = Vec::new();
    for (n, graphs) in corpus {
        let copies: Vec<Graph> = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| relabeled(g, i as u64))
            .collect();
        let results: Vec<(usize, usize, bool, bool)> = (0..graphs.len())
            .into_par_iter()
            .flat_map_iter(|i| (i..graphs.len()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let expected = oracle_iso(&graphs[i], &copies[j]).unwrap().is_some();
                let r = isomorphic(&graphs[i], &copies[j], 0).unwrap();
                let ok =
                    !r.is_isomorphic() || verify_mapping(&graphs[i], &copies[j], r.mapping.as_ref().unwrap());
                (i, j, expected, r.is_isomorphic() && ok)
            })
            .collect();
        pairs += results.len();
        disagreements.extend(
            results
                .iter()
                .filter(|r| r.2 != r.3)
                .map(|r| format!("n={n} ({}, {})", r.0, r.1)),
        );
        // the full pipeline without the degree-sequence shortcut on a sample
        let opts = IsoOptions {
            quick_reject: false,
            ..IsoOptions::default()
        };
        let step = (graphs.len() / 12).max(1);
        for i in (0..graphs.len()).step_by(step) {
            for j in (0..graphs.len()).step_by(step) {
                pairs += 1;
                let expected = oracle_iso(&graphs[i], &copies[j]).unwrap().is_some();
                if isomorphic_with(&graphs[i], &copies[j], &opts)
                    .unwrap()
                    .is_isomorphic()
                    != expected
                {
                    disagreements.push(format!("n={n} ({i}, {j}) without quick reject"));
                }
            }
        }
    }
    if disagreements.is_empty() {
        Ok(format!("{pairs} pairs, 0 disagreements"))
    } else {
        Err(disagreements.join("; "))
    }
}

fn regularization(corpus: &[(usize, Vec<Graph>)]) -> Outcome {
    let extra = [
        named::cube(),
        named::icosahedron(),
        named::dodecahedron(),
        gen_triangulation(40, 3),
    ];
    let all: Vec<&Graph> = corpus
        .iter()
        .flat_map(|c| c.1.iter())
        .chain(extra.iter())
        .collect();
    let bad: Vec<String> = all
        .par_iter()
        .enumerate()
        .filter_map(|(k, g)| {
            let c = regularize(g, &embed_planar(g).unwrap()).unwrap();
            let m = g.m();
            let h = c.graph();
            let mut ok = h.n() == 2 * m && h.m() == 3 * m;
            ok &= (0..h.n()).all(|v| {
                let ones = h
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| c.color(v, w) == Some(EdgeColor::Cycle))
                    .count();
                h.degree(v) == 3 && ones == 2
            });
            let cycles = c.cycles();
            let mut covered: Vec<usize> = cycles.iter().flatten().copied().collect();
            covered.sort_unstable();
            ok &= covered == (0..h.n()).collect::<Vec<_>>();
            let mut lens: Vec<usize> = cycles.iter().map(Vec::len).collect();
            lens.sort_unstable();
            ok &= lens == g.degree_sequence();
            ok &= euler_verify(h, c.embedding()) && c.check_invariants(m).is_ok();
            (!ok).then(|| format!("graph {k}"))
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} graphs", all.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn colored_equivalence(corpus: &[(usize, Vec<Graph>)]) -> Outcome {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (n, graphs) in corpus {
        let expand = |g: &Graph| regularize(g, &embed_planar(g).unwrap()).unwrap();
        let left: Vec<_> = graphs.iter().map(expand).collect();
        let right: Vec<_> = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| expand(&relabeled(g, 500 + i as u64)))
            .collect();
        let originals: Vec<Graph> = graphs
            .iter()
            .enumerate()
            .map(|(i, g)| relabeled(g, 500 + i as u64))
            .collect();
        // the brute-force coloured oracle is only run on the smaller levels
        let brute = *n <= 6;
        let results: Vec<Option<String>> = (0..graphs.len())
            .into_par_iter()
            .flat_map_iter(|i| (0..graphs.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| graphs[i].degree_sequence() == graphs[j].degree_sequence())
            .map(|(i, j)| {
                let expected = oracle_iso(&graphs[i], &originals[j]).unwrap().is_some();
                let phi = colored_isomorphism(&left[i], &right[j], &IsoOptions::default()).unwrap();
                let sound = phi
                    .as_ref()
                    .is_none_or(|p| color_respecting_iso_check(&left[i], &right[j], p));
                let mut ok = sound && phi.is_some() == expected;
                if brute {
                    ok &= oracle_colored_iso(&left[i], &right[j]).is_some() == expected;
                }
                (!ok).then(|| format!("n={n} ({i}, {j})"))
            })
            .collect();
        pairs += results.len();
        bad.extend(results.into_iter().flatten());
    }
    if bad.is_empty() {
        Ok(format!("{pairs} pairs with equal degree sequences"))
    } else {
        Err(bad.join("; "))
    }
}

fn walk_semantics() -> Outcome {
    let k4 = named::complete(4);
    let c = regularize(&k4, &embed_planar(&k4).unwrap()).unwrap();
    let rho = c.embedding();
    let mut errors = Vec::new();

    for e in c.graph().directed_edges() {
        let seq = ExplorationSequence::explicit(vec![0; 7], 12).unwrap();
        let w = walk(rho, e, &seq).unwrap();
        if w.iter()
            .enumerate()
            .any(|(k, &v)| v != if k % 2 == 0 { e.tail } else { e.head })
        {
            errors.push(format!("oscillation from {e:?}"));
        }
    }

    for face in trace_faces(c.graph(), rho).unwrap() {
        let start = face[face.len() - 1];
        let seq = ExplorationSequence::explicit(vec![1; face.len()], 12).unwrap();
        let w = walk(rho, start, &seq).unwrap();
        let heads: Vec<usize> = face.iter().map(|e| e.head).collect();
        if w[2..] != heads[..] {
            errors.push(format!("face {heads:?} walked as {w:?}"));
        }
    }

    let g = gen_triangulation(12, 4);
    let c = regularize(&g, &embed_planar(&g).unwrap()).unwrap();
    let seq = provide_sequence_with_length(c.n(), 4, 50_000);
    let start = DirectedEdge::new(0, c.embedding().rotation(0)[0]);
    let base = walk(c.embedding(), start, &seq).unwrap();
    for s in 0..200 {
        let perm = random_permutation(c.n(), s);
        let moved = walk(&c.embedding().relabel(&perm), start.map(&perm), &seq).unwrap();
        if moved.iter().zip(&base).any(|(&a, &b)| a != perm[b]) {
            errors.push(format!("relabeling {s}"));
        }
    }
    if errors.is_empty() {
        Ok("oscillation, face traces, 200 relabelings".into())
    } else {
        Err(errors.join("; "))
    }
}

fn uxs_verification() -> Outcome {
    let t = Instant::now();
    let r4 = verify_uxs_report(4, &provide_sequence(4, 0)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let shape = (r4.graphs, r4.rotation_systems, r4.trials);
    if !r4.passed() || shape != (1, 16, 192) || elapsed > Duration::from_secs(60) {
        return Err(format!("n=4: {shape:?}, failures {:?}, {elapsed:?}", r4.failures));
    }
    let t = Instant::now();
    let r6 = verify_uxs_report(6, &provide_sequence(6, 0)).map_err(|e| e.to_string())?;
    Ok(format!(
        "n=4 pass in {elapsed:.2?}; n=6 {} ({} graphs, {} trials, {} failures, {:.2?})",
        if r6.passed() { "pass" } else { "fail" },
        r6.graphs,
        r6.trials,
        r6.failures.len(),
        t.elapsed()
    ))
}

fn determinism() -> Outcome {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let read = |f: &str| std::fs::read_to_string(data.join(f)).map_err(|e| format!("{f}: {e}"));
    let bin = env!("CARGO_BIN_EXE_planiso");
    let run = |args: &[&str]| -> Result<String, String> {
        let out = std::process::Command::new(bin)
            .args(args)
            .current_dir(&data)
            .output()
            .map_err(|e| e.to_string())?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let mut errors = Vec::new();
    for name in ["k4", "cube", "octahedron", "w5"] {
        let graph = format!("{name}.graph");
        let copy = format!("{name}_relabeled.graph");
        let checks = [
            (format!("{name}.canon"), vec!["canon", graph.as_str()]),
            (
                format!("{name}.colored.canon"),
                vec!["canon", "--colored", graph.as_str()],
            ),
            (
                format!("{name}.iso"),
                vec!["iso", "--emit-mapping", graph.as_str(), copy.as_str()],
            ),
        ];
        for (golden, args) in checks {
            let expected = read(&golden)?;
            let first = run(&args)?;
            let second = run(&args)?;
            if first != expected || second != expected {
                errors.push(golden);
            }
        }
        let g = parse_graph_file(&read(&graph)?).map_err(|e| e.to_string())?.graph;
        let h = parse_graph_file(&read(&copy)?).map_err(|e| e.to_string())?.graph;
        let a = isomorphic(&g, &h, 3).map_err(|e| e.to_string())?;
        let b = isomorphic(&g, &h, 3).map_err(|e| e.to_string())?;
        if a != b {
            errors.push(format!("{name} library repeat"));
        }
    }
    if errors.is_empty() {
        Ok("golden files for k4, cube, octahedron, w5".into())
    } else {
        Err(format!("mismatch: {}", errors.join(", ")))
    }
}

fn mirror_behavior(corpus: &[(usize, Vec<Graph>)]) -> Outcome {
    let all: Vec<&Graph> = corpus.iter().flat_map(|c| c.1.iter()).collect();
    let no_mirror = IsoOptions {
        try_mirror: false,
        ..IsoOptions::default()
    };
    let results: Vec<(bool, bool)> = all
        .par_iter()
        .map(|g| {
            let rho = embed_planar(g).unwrap();
            let flipped = rho.mirror();
            let r = isomorphic_embedded(g, &rho, g, &flipped, &IsoOptions::default()).unwrap();
            let ok = r.mapping.as_ref().is_some_and(|m| verify_mapping(g, g, m));
            let one_sided = isomorphic_embedded(g, &rho, g, &flipped, &no_mirror).unwrap();
            let sound = one_sided.mapping.as_ref().is_none_or(|m| verify_mapping(g, g, m));
            (ok && sound, one_sided.is_isomorphic())
        })
        .collect();
    let failures = results.iter().filter(|r| !r.0).count();
    let chiral = results.iter().filter(|r| !r.1).count();
    if failures == 0 && chiral > 0 {
        Ok(format!("{} graphs; {chiral} need the mirror branch", all.len()))
    } else {
        Err(format!("{failures} failures, {chiral} chiral"))
    }
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<(&str, Check)> = vec![
        ("1 completeness", Box::new(completeness)),
        ("2 soundness vs oracle", Box::new(|| soundness(&corpus))),
        (
            "3 regularization invariants",
            Box::new(|| regularization(&corpus)),
        ),
        (
            "4 coloured isomorphism equivalence",
            Box::new(|| colored_equivalence(&corpus)),
        ),
        ("5 walk semantics", Box::new(walk_semantics)),
        ("6 exploration sequence verification", Box::new(uxs_verification)),
        ("7 determinism", Box::new(determinism)),
        ("8 mirror embeddings", Box::new(|| mirror_behavior(&corpus))),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("criterion {name}: PASS ({detail}) [{:.1?}]", t.elapsed()),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail}) [{:.1?}]", t.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
