//! Cross-checking suites.
//!
//! Each suite pits two independent computations of the same quantity against
//! each other over an exhaustive or seeded-random family and reports every
//! case.  The suites back the command-line `verify` subcommand and the
//! acceptance tests; failures carry the offending element so they can be
//! replayed.

use crate::burge::{kappa_nw, kappa_se};
use crate::kr;
use crate::paths;
use crate::pbw::{self, LusztigDatum, Support};
use crate::roots::{find_word_path, reduced_word_i0, transition, BraidMove, DEFAULT_SEARCH_CAP};
use crate::tableaux::{self, Tableau};
use crate::trails;
use serde::Serialize;
use serde_json::json;

/// Shared knobs for the suites.
#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    pub n: u8,
    pub s: u64,
    pub bound: u32,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 4,
            s: 1,
            bound: 2,
            seed: 1,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub n: u8,
    pub s: u64,
    pub bound: u32,
    pub seed: u64,
    pub passed: bool,
    pub cases: Vec<CaseResult>,
}

impl Report {
    fn new(suite: &str, cfg: &RunConfig, cases: Vec<CaseResult>) -> Report {
        Report {
            suite: suite.to_string(),
            n: cfg.n,
            s: cfg.s,
            bound: cfg.bound,
            seed: cfg.seed,
            passed: cases.iter().all(|c| c.passed),
            cases,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            out.push_str(&format!(
                "{} {}{}\n",
                if case.passed { "pass" } else { "FAIL" },
                case.name,
                case.detail
                    .as_deref()
                    .map(|d| format!(" — {d}"))
                    .unwrap_or_default()
            ));
        }
        out.push_str(&format!(
            "{}: {}\n",
            self.suite,
            if self.passed {
                "all checks passed"
            } else {
                "FAILURES"
            }
        ));
        out
    }
}

fn head(failures: &[String]) -> Option<String> {
    if failures.is_empty() {
        None
    } else {
        let mut detail = failures[..failures.len().min(3)].join("; ");
        if failures.len() > 3 {
            detail.push_str(&format!(" … and {} more", failures.len() - 3));
        }
        Some(detail)
    }
}

/// Tiny deterministic generator for the randomized suites.
pub struct XorShift {
    state: u64,
}

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift {
            state: seed.wrapping_mul(0x9e3779b97f4a7c15) | 1,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        self.state
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

pub fn random_upper_datum(n: u8, bound: u32, rng: &mut XorShift) -> LusztigDatum {
    let m = (n as usize) * (n as usize - 1) / 2;
    let mut c = LusztigDatum::zero(n, Support::JUpper);
    for k in 0..m {
        c.set_by_index(k, rng.below(bound as u64 + 1) as u32);
    }
    c
}

/// Splits the items across a small worker pool and concatenates the results
/// in input order; the work function must be pure.
pub fn run_sharded<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() < 2 * jobs {
        return items.iter().flat_map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut out: Vec<(usize, Vec<R>)> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (k, part) in items.chunks(chunk).enumerate() {
            let f = &f;
            handles.push(scope.spawn(move || (k, part.iter().flat_map(f).collect::<Vec<R>>())));
        }
        for h in handles {
            out.push(h.join().expect("worker panicked"));
        }
    });
    out.sort_by_key(|(k, _)| *k);
    out.into_iter().flat_map(|(_, rs)| rs).collect()
}

pub const SUITES: &[&str] = &[
    "operator-oracle",
    "tensor-split",
    "burge-equivariance",
    "shape-equality",
    "trail-counts",
    "kr-iso",
    "embedding",
];

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report, String> {
    match name {
        "operator-oracle" => Ok(operator_oracle(cfg)),
        "tensor-split" => Ok(tensor_split(cfg)),
        "burge-equivariance" => Ok(burge_equivariance(cfg)),
        "shape-equality" => Ok(shape_equality(cfg)),
        "trail-counts" => Ok(trail_counts(cfg)),
        "kr-iso" => Ok(kr_iso(cfg)),
        "embedding" => Ok(embedding(cfg)),
        _ => Err(format!(
            "unknown suite {name:?}; available: {}",
            SUITES.join(", ")
        )),
    }
}

/// Signature-rule operators against the braid-move transition maps, plus the
/// `ε_n*` readout at the far end of the word.
fn operator_oracle(cfg: &RunConfig) -> Report {
    let n = cfg.n;
    let i0 = reduced_word_i0(n);
    let mut cases = Vec::new();
    let mut first_letter_paths: Vec<Vec<BraidMove>> = Vec::new();
    let mut ok = true;
    for i in 1..=n {
        match find_word_path(&i0, n, DEFAULT_SEARCH_CAP, |w| w[0] == i) {
            Ok(p) => first_letter_paths.push(p),
            Err(e) => {
                cases.push(CaseResult {
                    name: format!("braid path to a word starting with {i}"),
                    passed: false,
                    detail: Some(e.to_string()),
                });
                ok = false;
                first_letter_paths.push(Vec::new());
            }
        }
    }
    let last = trails::star(n, n);
    let last_path = match find_word_path(&i0, n, DEFAULT_SEARCH_CAP, |w| *w.last().unwrap() == last)
    {
        Ok(p) => p,
        Err(e) => {
            cases.push(CaseResult {
                name: format!("braid path to a word ending with {last}"),
                passed: false,
                detail: Some(e.to_string()),
            });
            return Report::new("operator-oracle", cfg, cases);
        }
    };
    if !ok {
        return Report::new("operator-oracle", cfg, cases);
    }
    let data = pbw::enumerate_data(n, Support::Full, cfg.bound);
    let failures: Vec<String> = run_sharded(data, cfg.jobs, |c| {
        let mut bad = Vec::new();
        for i in 1..=n {
            let moves = &first_letter_paths[i as usize - 1];
            let (mut vals, word) = transition(c.values(), &i0, moves, n).unwrap();
            vals[0] += 1;
            let rev: Vec<BraidMove> = moves.iter().rev().copied().collect();
            let (vals, _) = transition(&vals, &word, &rev, n).unwrap();
            let oracle = LusztigDatum::from_values(n, Support::Full, vals).unwrap();
            let lowered = pbw::f_full(c, i);
            if lowered != oracle {
                bad.push(format!("f_{i} mismatch at {:?}", c.values()));
            }
            // raising undoes lowering, and the weight drops by α_i
            if pbw::e_full(&lowered, i).as_ref() != Some(c) {
                bad.push(format!("e_{i} does not undo f_{i} at {:?}", c.values()));
            }
            let mut alpha = vec![0i64; n as usize];
            crate::roots::Root::simple(i, n).add_into(&mut alpha, 1);
            let (wa, wb) = (c.weight(), lowered.weight());
            if !(0..n as usize).all(|k| wb[k] == wa[k] - alpha[k]) {
                bad.push(format!("weight drop fails for f_{i} at {:?}", c.values()));
            }
        }
        // ε_n* from the double-path formula vs the far coordinate
        let (upper, _) = c.split();
        let (vals, _) = transition(c.values(), &i0, &last_path, n).unwrap();
        let far = *vals.last().unwrap() as u64;
        let lower_sum: u64 = c.values()[c.num_sum_roots()..]
            .iter()
            .map(|&v| v as u64)
            .sum();
        if lower_sum == 0 && paths::epsilon_star(&upper) != far {
            bad.push(format!("ε_n* mismatch at {:?}", c.values()));
        }
        bad
    });
    let total = (cfg.bound as usize + 1).pow((n as u32) * (n as u32 - 1));
    cases.push(CaseResult {
        name: format!("operators of {total} data agree with the transition oracle"),
        passed: failures.is_empty(),
        detail: head(&failures),
    });
    Report::new("operator-oracle", cfg, cases)
}

/// The full operator against the tensor rule on the two halves.
fn tensor_split(cfg: &RunConfig) -> Report {
    let n = cfg.n;
    let data = pbw::enumerate_data(n, Support::Full, cfg.bound.min(1));
    let failures: Vec<String> = run_sharded(data, cfg.jobs, |c| {
        let (up, low) = c.split();
        let mut bad = Vec::new();
        if LusztigDatum::combine(&up, &low) != *c {
            bad.push(format!("split does not recombine at {:?}", c.values()));
        }
        for i in 1..n {
            let expect = if (pbw::phi_upper(&up, i) as i64) > pbw::eps_lower(&low, i) as i64 {
                pbw::f_upper(&up, i).map(|m| LusztigDatum::combine(&m, &low))
            } else {
                Some(LusztigDatum::combine(&up, &pbw::f_lower(&low, i)))
            };
            if Some(pbw::f_full(c, i)) != expect {
                bad.push(format!("tensor rule fails for i = {i} at {:?}", c.values()));
            }
        }
        bad
    });
    let case = CaseResult {
        name: "full operators follow the tensor rule on split data".to_string(),
        passed: failures.is_empty(),
        detail: head(&failures),
    };
    Report::new("tensor-split", cfg, vec![case])
}

fn intertwines(c: &LusztigDatum, n: u8, s_cap: u64) -> Vec<String> {
    let mut bad = Vec::new();
    let t_se = kappa_se(c);
    // classical nodes and node n on the anti-normal side
    for i in 1..=n {
        let lhs = if i == n {
            kr::f_affine(c, i, s_cap)
        } else {
            pbw::f_upper(c, i)
        };
        let rhs = if i == n {
            kr::tableau_f_affine(&t_se, i, n, s_cap)
        } else {
            tableaux::tableau_f(&t_se, i)
        };
        match (lhs, rhs) {
            (None, None) => {}
            (Some(cl), Some(tr)) => {
                if kappa_se(&cl) != tr {
                    bad.push(format!("f_{i} not intertwined at {:?}", c.values()));
                }
            }
            _ => bad.push(format!(
                "f_{i} defined on one side only at {:?}",
                c.values()
            )),
        }
        let lhs = if i == n {
            kr::e_affine(c, i, s_cap)
        } else {
            pbw::e_upper(c, i)
        };
        let rhs = if i == n {
            kr::tableau_e_affine(&t_se, i, n, s_cap)
        } else {
            tableaux::tableau_e(&t_se, i)
        };
        match (lhs, rhs) {
            (None, None) => {}
            (Some(cl), Some(tr)) => {
                if kappa_se(&cl) != tr {
                    bad.push(format!("e_{i} not intertwined at {:?}", c.values()));
                }
            }
            _ => bad.push(format!(
                "e_{i} defined on one side only at {:?}",
                c.values()
            )),
        }
    }
    // nodes 0..n−1 on the normal side
    let t_nw = kappa_nw(c);
    for i in 0..n {
        let lhs = if i == 0 {
            kr::f_affine(c, 0, s_cap)
        } else {
            pbw::f_upper(c, i)
        };
        let rhs = if i == 0 {
            tableaux::f_0_nw(&t_nw)
        } else {
            tableaux::tableau_f(&t_nw, i)
        };
        match (lhs, rhs) {
            (None, None) => {}
            (Some(cl), Some(tr)) => {
                if kappa_nw(&cl) != tr {
                    bad.push(format!(
                        "northwest f_{i} not intertwined at {:?}",
                        c.values()
                    ));
                }
            }
            _ => bad.push(format!(
                "northwest f_{i} defined on one side only at {:?}",
                c.values()
            )),
        }
        let lhs = if i == 0 {
            // uncapped raising at node 0
            let mut out = c.clone();
            let corner = crate::roots::Root::sum(1, 2);
            out.set_root(corner, out.get_root(corner) + 1);
            Some(out)
        } else {
            pbw::e_upper(c, i)
        };
        let rhs = if i == 0 {
            Some(tableaux::e_0_nw(&t_nw))
        } else {
            tableaux::tableau_e(&t_nw, i)
        };
        match (lhs, rhs) {
            (None, None) => {}
            (Some(cl), Some(tr)) => {
                if kappa_nw(&cl) != tr {
                    bad.push(format!(
                        "northwest e_{i} not intertwined at {:?}",
                        c.values()
                    ));
                }
            }
            _ => bad.push(format!(
                "northwest e_{i} defined on one side only at {:?}",
                c.values()
            )),
        }
    }
    bad
}

/// Insertion intertwines every operator with the tableau operators.
fn burge_equivariance(cfg: &RunConfig) -> Report {
    let n = cfg.n;
    // a level cap far above anything the data can reach keeps node n uncapped
    let m = (n as u64) * (n as u64 - 1) / 2;
    let s_cap = (cfg.bound as u64 + 1) * m + 1;
    let mut cases = Vec::new();
    let data = pbw::enumerate_data(n, Support::JUpper, cfg.bound);
    let total = data.len();
    let failures: Vec<String> = run_sharded(data, cfg.jobs, |c| intertwines(c, n, s_cap));
    cases.push(CaseResult {
        name: format!("insertion intertwines the operators on {total} exhaustive data"),
        passed: failures.is_empty(),
        detail: head(&failures),
    });
    let mut rng = XorShift::new(cfg.seed);
    let sampled: Vec<LusztigDatum> = (0..10_000)
        .map(|_| random_upper_datum(5, cfg.bound.max(3), &mut rng))
        .collect();
    let s_cap5 = (cfg.bound.max(3) as u64 + 1) * 10 + 1;
    let failures: Vec<String> = run_sharded(sampled, cfg.jobs, |c| intertwines(c, 5, s_cap5));
    cases.push(CaseResult {
        name: "insertion intertwines the operators on 10000 random rank-5 data".to_string(),
        passed: failures.is_empty(),
        detail: head(&failures),
    });
    Report::new("burge-equivariance", cfg, cases)
}

/// Insertion shape against the non-intersecting tuple maxima.
fn shape_equality(cfg: &RunConfig) -> Report {
    let n = cfg.n;
    let data = pbw::enumerate_data(n, Support::JUpper, cfg.bound);
    let total = data.len();
    let failures: Vec<String> = run_sharded(data, cfg.jobs, |c| {
        if crate::burge::lambda_of(c) != paths::shape_from_paths(c) {
            vec![format!("shape mismatch at {:?}", c.values())]
        } else {
            Vec::new()
        }
    });
    let mut cases = vec![CaseResult {
        name: format!("insertion shape equals the path formula on {total} exhaustive data"),
        passed: failures.is_empty(),
        detail: head(&failures),
    }];
    let mut rng = XorShift::new(cfg.seed);
    for nn in [5u8, 6] {
        let sampled: Vec<LusztigDatum> = (0..1000)
            .map(|_| random_upper_datum(nn, 3, &mut rng))
            .collect();
        let failures: Vec<String> = run_sharded(sampled, cfg.jobs, |c| {
            if crate::burge::lambda_of(c) != paths::shape_from_paths(c) {
                vec![format!("shape mismatch at {:?}", c.values())]
            } else {
                Vec::new()
            }
        });
        cases.push(CaseResult {
            name: format!("insertion shape equals the path formula on 1000 random rank-{nn} data"),
            passed: failures.is_empty(),
            detail: head(&failures),
        });
    }
    Report::new("shape-equality", cfg, cases)
}

/// Restricted trails, valid arrays, and double paths at the top are counted
/// against each other.
fn trail_counts(cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    for n in 4..=cfg.n.max(6) {
        let trails = trails::restricted_trails(n).len();
        let paths = paths::double_paths_at(n, crate::delta::TriangleCoord::new(1, 1)).len();
        let rl = trails::enumerate_darrays(n, 1, trails::BottomOrientation::RightToLeft).len();
        let lr = trails::enumerate_darrays(n, 1, trails::BottomOrientation::LeftToRight).len();
        let agree = trails == paths && (rl == trails || lr == trails);
        cases.push(CaseResult {
            name: format!(
                "rank {n}: trails {trails}, arrays {}, double paths {paths}",
                if rl == trails { rl } else { lr }
            ),
            passed: agree,
            detail: if agree {
                None
            } else {
                Some(format!(
                    "counts differ: trails {trails}, arrays rl {rl} / lr {lr}, paths {paths}"
                ))
            },
        });
    }
    Report::new("trail-counts", cfg, cases)
}

fn kr_iso(cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    match kr::check_isomorphism(cfg.n, cfg.s) {
        Ok(count) => cases.push(CaseResult {
            name: format!("labeled digraphs agree on {count} vertices"),
            passed: true,
            detail: None,
        }),
        Err(e) => cases.push(CaseResult {
            name: "labeled digraph comparison".to_string(),
            passed: false,
            detail: Some(e),
        }),
    }
    for side in [kr::GraphSide::Lusztig, kr::GraphSide::Tableau] {
        let name = format!("string regularity on the {side:?} side");
        match kr::check_regularity(cfg.n, cfg.s, side) {
            Ok(()) => cases.push(CaseResult {
                name,
                passed: true,
                detail: None,
            }),
            Err(e) => cases.push(CaseResult {
                name,
                passed: false,
                detail: Some(e),
            }),
        }
    }
    Report::new("kr-iso", cfg, cases)
}

fn embedding(cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    for t in cfg.s..=cfg.s + 2 {
        let name = format!("level {} sits inside level {t}", cfg.s);
        match kr::check_embedding(cfg.n, cfg.s, t) {
            Ok(()) => cases.push(CaseResult {
                name,
                passed: true,
                detail: None,
            }),
            Err(e) => cases.push(CaseResult {
                name,
                passed: false,
                detail: Some(e),
            }),
        }
    }
    Report::new("embedding", cfg, cases)
}

/// Computes the shape by both routes, for the command line.
pub fn shape_both_ways(c: &LusztigDatum) -> (Vec<usize>, Vec<usize>, bool) {
    let by_insertion = crate::burge::lambda_of(c);
    let by_paths = paths::shape_from_paths(c);
    let agree = by_insertion == by_paths;
    (by_insertion, by_paths, agree)
}

/// Renders a tableau plus its shape for the command line.
pub fn tableau_output(t: &Tableau, as_json: bool) -> String {
    if as_json {
        t.to_json().to_string()
    } else {
        format!("{}shape: {:?}\n", t.render_text(), t.shape())
    }
}
