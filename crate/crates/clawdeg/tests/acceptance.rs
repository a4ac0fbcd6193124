//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use clawdeg::verify::{self, Method, Oracles};
use clawdeg_core::claw;
use clawdeg_core::cuts;
use clawdeg_core::formulas;
use clawdeg_core::geometry::{vh_consistent, Rat, VPolytope};
use clawdeg_core::group::{zero_sum_tuples, GroupId, SymmetryAction};
use clawdeg_core::lattice::lattice_index;
use clawdeg_core::lemmas::Verdict;
use clawdeg_core::volume::{self, TriangulateOptions};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

fn three_way(g: GroupId, ns: std::ops::RangeInclusive<usize>, expected: &[i64], budget: Duration) -> Check {
    let start = Instant::now();
    let o = Oracles::default();
    for (n, &want) in ns.zip(expected) {
        let c = verify::cross_check(&o, Method::All, g, n, TriangulateOptions::default()).map_err(|e| e.to_string())?;
        let want = want.to_string();
        let values = [&c.formula, &c.inclusion_exclusion, &c.triangulation];
        if !c.agree || values.iter().any(|v| v.as_deref() != Some(want.as_str())) {
            return Err(format!("n={n}: {c:?}, expected {want}"));
        }
    }
    let took = start.elapsed();
    if took > budget {
        return Err(format!("took {took:?}, budget {budget:?}"));
    }
    Ok(format!("{expected:?} in {took:.2?}"))
}

fn c1() -> Check {
    three_way(GroupId::Z2, 2..=6, &[0, 1, 8, 52, 344], Duration::from_secs(60))
}

fn c2() -> Check {
    three_way(GroupId::Z3, 2..=4, &[0, 9, 660], Duration::from_secs(300))
}

fn c3() -> Check {
    three_way(GroupId::Z2xZ2, 2..=3, &[0, 96], Duration::from_secs(900))
}

fn c4() -> Check {
    let start = Instant::now();
    for g in GroupId::ALL {
        for n in 2..=8 {
            let d = formulas::degree_rational(g, n).map_err(|e| e.to_string())?;
            let a = cuts::assemble(g, n).map_err(|e| e.to_string())?;
            if d != a {
                return Err(format!("{g} n={n}: formula {d} vs assembly {a}"));
            }
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(1) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("21 cases in {took:.2?}"))
}

fn c5() -> Check {
    let jobs = verify::standard_jobs();
    let out = verify::check_lemmas(&jobs).map_err(|e| e.to_string())?;
    let bad: Vec<_> = out.iter().filter(|o| !o.verdict.is_confirmed()).collect();
    if let Some(o) = bad.first() {
        let why = match &o.verdict {
            Verdict::Refuted(w) => w.as_str(),
            Verdict::Confirmed => "",
        };
        return Err(format!("{} refutations, first {} n={} {}: {why}", bad.len(), o.lemma, o.n, o.hypothesis));
    }
    Ok(format!("{} instances over {} jobs, 0 refuted", out.len(), jobs.len()))
}

fn c6() -> Check {
    let mut count = 0;
    for (g, max) in [(GroupId::Z2, 5), (GroupId::Z3, 3), (GroupId::Z2xZ2, 3)] {
        for n in 2..=max {
            let v = claw::vertices(g, n).map_err(|e| e.to_string())?;
            let h = claw::facets(g, n).map_err(|e| e.to_string())?;
            if !vh_consistent(&v, &h) {
                return Err(format!("{g} n={n}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} polytopes"))
}

fn c7() -> Check {
    for (g, want) in [(GroupId::Z2, 2), (GroupId::Z2xZ2, 4), (GroupId::Z3, 3)] {
        for n in 2..=4 {
            let l = claw::lattice(g, n).map_err(|e| e.to_string())?;
            let idx = lattice_index(l.dim(), l.generators()).map_err(|e| e.to_string())?;
            if idx != BigInt::from(want) || *l.index() != idx {
                return Err(format!("{g} n={n}: index {idx}"));
            }
        }
    }
    Ok("2 / 4 / 3 at n = 2..4".into())
}

fn c8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let n = 3;
    for g in GroupId::ALL {
        let v = claw::vertices(g, n).map_err(|e| e.to_string())?;
        let tuples = zero_sum_tuples(g, n).map_err(|e| e.to_string())?;
        let autos = g.automorphisms();
        for _ in 0..50 {
            let act = match rng.gen_range(0..3) {
                0 => SymmetryAction::translate(tuples.choose(&mut rng).unwrap()),
                1 => {
                    let mut s: Vec<usize> = (0..n).collect();
                    s.shuffle(&mut rng);
                    SymmetryAction::permute(g, s)
                }
                _ => SymmetryAction::automorphism(g, n, autos.choose(&mut rng).unwrap().clone()),
            }
            .map_err(|e| e.to_string())?;
            let mut img = v
                .vertices()
                .iter()
                .map(|p| act.apply(p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            img.sort();
            if img != v.vertices() {
                return Err(format!("{g}: {:?} moves the vertex set", act.kind()));
            }
        }
    }
    Ok("150 actions".into())
}

fn random_factor(rng: &mut ChaCha8Rng) -> VPolytope {
    loop {
        let d = rng.gen_range(1..=3);
        let m = rng.gen_range(d..=2 * d + 1);
        let mut pts: Vec<Vec<i64>> = (0..m).map(|_| (0..d).map(|_| rng.gen_range(0..=1)).collect()).collect();
        pts.push(vec![0; d]);
        let p = VPolytope::from_int_points(d, &pts).unwrap().canonicalize().unwrap();
        if p.is_full_dimensional() {
            return p;
        }
    }
}

fn c9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..100 {
        let k = rng.gen_range(2..=3);
        let factors: Vec<VPolytope> = (0..k).map(|_| random_factor(&mut rng)).collect();
        let mut product = rat(1);
        for f in &factors {
            product *= volume::lattice_volume(f, None).map_err(|e| e.to_string())?;
        }
        let j = volume::join_all(&factors).map_err(|e| e.to_string())?;
        let v = volume::lattice_volume(&j, None).map_err(|e| e.to_string())?;
        if v != product {
            return Err(format!("instance {i}: join {v} vs product {product}"));
        }
    }
    let ri = VPolytope::from_int_points(3, &[vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![1, 0, 1]])
        .map_err(|e| e.to_string())?;
    for n in 2..=3 {
        let j = volume::join_all(&vec![ri.clone(); n]).map_err(|e| e.to_string())?;
        let v = volume::lattice_volume(&j, None).map_err(|e| e.to_string())?;
        if v != rat(1 << n) {
            return Err(format!("R_i join at n={n}: {v}"));
        }
    }
    Ok("100 random joins, R_i blocks give 4 and 8".into())
}

/// Set-level triple symmetric difference, written out independently.
fn delta(a: u64, b: u64, c: u64) -> u64 {
    (a & !(b | c)) | (b & !(a | c)) | (c & !(a | b)) | (a & b & c)
}

fn c10() -> Check {
    for n in 2..=5usize {
        let odd: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() % 2 == 1).collect();
        let mut brute = 0u64;
        for &a in &odd {
            for &b in &odd {
                for &c in &odd {
                    brute += u64::from(delta(a, b, c).count_ones() == 1);
                }
            }
        }
        let want = n as u64 * 4u64.pow(n as u32 - 1);
        let lib = cuts::count_delta_admissible(n);
        if brute != want || lib != want {
            return Err(format!("n={n}: brute {brute}, library {lib}, expected {want}"));
        }
    }
    Ok("n = 2..5".into())
}

fn c11() -> Check {
    let args = ["verify", "--group", "z3", "--n", "2..3", "--method", "all", "--format", "json"];
    let run = || Command::new(env!("CARGO_BIN_EXE_clawdeg")).args(args).output();
    let a = run().map_err(|e| e.to_string())?;
    let b = run().map_err(|e| e.to_string())?;
    if !a.status.success() || a.stdout != b.stdout || a.stderr != b.stderr || a.status != b.status {
        return Err(format!("runs differ or failed: {:?} / {:?}", a.status, b.status));
    }
    let faulty = Oracles {
        triangulation: |g, n, o| Ok(verify::triangulated_degree(g, n, o)? + rat(1)),
        ..Oracles::default()
    };
    let mut sink = Vec::new();
    let mut err = Vec::new();
    let code = clawdeg::run(std::iter::once("clawdeg").chain(args), &faulty, &mut sink, &mut err);
    if code != 1 {
        return Err(format!("fault injection exited {code}"));
    }
    Ok(format!("{} identical bytes, fault injection exits 1", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("degree agreement Z2", c1),
        ("degree agreement Z3", c2),
        ("degree agreement Z2xZ2", c3),
        ("formula equals assembly", c4),
        ("lemma suite", c5),
        ("V/H consistency", c6),
        ("lattice indices", c7),
        ("symmetry actions", c8),
        ("join products", c9),
        ("counting identity", c10),
        ("determinism", c11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
