//! End-to-end acceptance checks: golden cases, exhaustive oracle
//! agreements, counting identities, and graph isomorphisms, each with its
//! wall-clock budget.  One summary line prints per criterion.

use dcrystal::burge::{glue_t, kappa_se, lambda_of};
use dcrystal::delta::TriangleCoord;
use dcrystal::kr;
use dcrystal::paths;
use dcrystal::pbw::{enumerate_data, LusztigDatum, Support};
use dcrystal::tableaux::{Letter, Tableau};
use dcrystal::trails;
use dcrystal::verify::{run_suite, RunConfig};
use std::time::{Duration, Instant};

fn golden_rank5() -> LusztigDatum {
    LusztigDatum::from_triangle_string("[[2],[1,0],[1,2,1],[2,1,0,1]]").unwrap()
}

fn golden_rank6() -> LusztigDatum {
    LusztigDatum::from_triangle_string("[[1],[2,3],[2,1,1],[1,3,2,1],[2,3,2,0,3]]").unwrap()
}

fn glue_rank6() -> LusztigDatum {
    LusztigDatum::from_triangle_string("[[0],[0,3],[0,1,1],[0,3,2,1],[0,3,2,0,3]]").unwrap()
}

fn letters(rows: &[&[u8]]) -> Vec<Vec<Letter>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| Letter(v)).collect())
        .collect()
}

fn budget(name: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    assert!(
        elapsed < limit,
        "{name} took {elapsed:?}, over the {limit:?} budget"
    );
    println!("{name}: pass ({elapsed:?})");
}

#[test]
fn ac01_golden_insertion_and_epsilon_star() {
    let start = Instant::now();
    let c = golden_rank5();
    let expect = Tableau::new(
        vec![7, 7, 0, 0],
        letters(&[
            &[5, 4],
            &[3, 3],
            &[5, 5, 5, 5, 5, 4, 4, 2, 2],
            &[4, 4, 3, 2, 2, 1, 1, 1, 1],
        ]),
    )
    .unwrap();
    let inserted = kappa_se(&c);
    assert_eq!(
        inserted, expect,
        "southeast insertion must match the printed tableau"
    );
    assert_eq!(inserted.shape(), vec![9, 9, 2, 2]);
    assert_eq!(paths::epsilon_star(&c), 9, "double-path formula");
    assert_eq!(trails::max_trail_norm(&c), 9, "trail maximum");
    assert_eq!(trails::epsilon_star_bz(&c), 9, "string formula");
    budget(
        "AC1 golden rank-5 insertion and ε_n*",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn ac02_golden_shape_and_tuple_maxima() {
    let start = Instant::now();
    let c = golden_rank6();
    assert_eq!(lambda_of(&c), vec![19, 19, 6, 6, 2, 2]);
    assert_eq!(paths::max_nonintersecting(&c, 1).unwrap(), 19);
    assert_eq!(paths::max_nonintersecting(&c, 2).unwrap(), 25);
    assert_eq!(paths::max_nonintersecting(&c, 3).unwrap(), 27);
    budget(
        "AC2 golden rank-6 shape and tuple maxima",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn ac03_golden_gluing() {
    let start = Instant::now();
    let c = glue_rank6();
    let expect = Tableau::new(
        vec![11, 11, 0, 0],
        letters(&[
            &[5, 5, 4, 4],
            &[3, 3, 3, 3],
            &[5, 5, 5, 5, 5, 5, 5, 5, 4, 3, 2, 2, 2, 2, 2],
            &[4, 4, 4, 4, 4, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1],
        ]),
    )
    .unwrap();
    let glued = glue_t(&c, 4).unwrap();
    assert_eq!(glued, expect, "gluing must reproduce the printed tableau");
    assert_eq!(glued, kappa_se(&c), "gluing agrees with direct insertion");
    budget("AC3 golden rank-6 gluing", start, Duration::from_secs(1));
}

#[test]
fn ac04_equivariance() {
    let start = Instant::now();
    let cfg = RunConfig {
        n: 4,
        s: 1,
        bound: 2,
        seed: 20240817,
        jobs: 4,
    };
    let report = run_suite("burge-equivariance", &cfg).unwrap();
    assert!(report.passed, "{}", report.render_text());
    budget(
        "AC4 insertion equivariance (exhaustive rank 4, random rank 5)",
        start,
        Duration::from_secs(300),
    );
}

#[test]
fn ac05_operator_oracle() {
    let start = Instant::now();
    let cfg = RunConfig {
        n: 4,
        s: 1,
        bound: 2,
        seed: 1,
        jobs: 4,
    };
    let report = run_suite("operator-oracle", &cfg).unwrap();
    assert!(report.passed, "{}", report.render_text());
    budget(
        "AC5 signature rule vs transition-map oracle",
        start,
        Duration::from_secs(600),
    );
}

#[test]
fn ac06_shape_formula() {
    let start = Instant::now();
    let cfg = RunConfig {
        n: 4,
        s: 1,
        bound: 2,
        seed: 99,
        jobs: 4,
    };
    let report = run_suite("shape-equality", &cfg).unwrap();
    assert!(report.passed, "{}", report.render_text());
    println!(
        "AC6 shape formula (exhaustive rank 4, random ranks 5 and 6): pass ({:?})",
        start.elapsed()
    );
}

#[test]
fn ac07_level_counts() {
    let start = Instant::now();
    assert_eq!(kr::enumerate_level(4, 1).len(), 8);
    assert_eq!(1u64 << 3, 8, "the level-1 count is 2^(n-1)");
    for (n, s) in [(4u8, 1u64), (4, 2), (5, 1)] {
        let count = kr::enumerate_level(n, s).len() as u128;
        let dim = kr::weyl_dim_spin(n, s);
        assert_eq!(
            count, dim,
            "level count vs Weyl dimension at (n, s) = ({n}, {s})"
        );
    }
    println!(
        "AC7 level counts vs Weyl dimensions: pass ({:?})",
        start.elapsed()
    );
}

#[test]
fn ac08_graph_isomorphism_and_regularity() {
    let start = Instant::now();
    for (n, s) in [(4u8, 1u64), (4, 2), (5, 1)] {
        let verts = kr::check_isomorphism(n, s).unwrap();
        assert_eq!(verts as u128, kr::weyl_dim_spin(n, s));
        kr::check_regularity(n, s, kr::GraphSide::Lusztig).unwrap();
        kr::check_regularity(n, s, kr::GraphSide::Tableau).unwrap();
    }
    budget(
        "AC8 labeled-digraph isomorphism and string regularity",
        start,
        Duration::from_secs(120),
    );
}

#[test]
fn ac09_bijection_counts() {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 4..=6u8 {
        let trails = trails::restricted_trails(n).len();
        let at_top = paths::double_paths_at(n, TriangleCoord::new(1, 1)).len();
        let rl = trails::enumerate_darrays(n, 1, trails::BottomOrientation::RightToLeft).len();
        let lr = trails::enumerate_darrays(n, 1, trails::BottomOrientation::LeftToRight).len();
        assert_eq!(trails, at_top, "trail and double-path counts at rank {n}");
        assert!(
            rl == trails || lr == trails,
            "no array orientation matches at rank {n}: rl {rl}, lr {lr}, trails {trails}"
        );
        counts.push(trails);
    }
    assert_eq!(counts[0], 2);
    assert_eq!(counts[1], 5);
    println!(
        "AC9 trail/array/double-path counts agree (ranks 4..6: {counts:?}): pass ({:?})",
        start.elapsed()
    );
}

#[test]
fn ac10_string_formula_shape_parts() {
    let start = Instant::now();
    for c in enumerate_data(4, Support::JUpper, 2) {
        let shape = lambda_of(&c);
        for l in 1..=2usize {
            let part = shape.get(2 * l - 2).copied().unwrap_or(0) as i64;
            assert_eq!(
                trails::lambda_odd_bz(&c, l).unwrap(),
                part,
                "string formula at l = {l} for {:?}",
                c.values()
            );
            assert_eq!(
                trails::lambda_odd_chain(&c, l).unwrap() as i64,
                part,
                "raising chain at l = {l} for {:?}",
                c.values()
            );
        }
    }
    println!(
        "AC10 string-formula shape parts (exhaustive rank 4): pass ({:?})",
        start.elapsed()
    );
}
