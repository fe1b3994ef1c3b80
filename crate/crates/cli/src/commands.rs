use std::fmt::Write as _;
use std::path::Path;
use std::time::{Duration, Instant};

use shifting_coresets::check::{
    check_dominating, check_independent, check_rect_independent, check_vertex_cover,
};
use shifting_coresets::instances::{
    gen_clustered_points, gen_uniform_points, gen_uniform_rects, read_instance, write_instance,
    InstanceFile, Records, Rng,
};
use shifting_coresets::{
    ds_shifted, exact_min_pds, exact_min_vc_udg, exact_mwis_rect, exact_mwis_udg, greedy_ds_udg,
    greedy_wis_udg, pds_shifted, vc_shifted, wis_rect_shifted, wis_shifted, PdsInstance, Problem,
    Solution, SolverConfig, WeightedPoint, WeightedRect,
};

use crate::report::{emit, SolveReport, VerifyReport};
use crate::{BenchArgs, CliError, GenArgs, GenKind, OracleArgs, SolveArgs, SolverFlags, VerifyArgs};

/// Slack on ratio checks; only summation order differs between runs.
const RATIO_SLACK: f64 = 1e-9;

impl SolverFlags {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            cap: self.max_coreset,
            node_budget: self.node_budget,
            threads: self.threads,
        }
    }
}

/// A loaded instance in the shape the chosen problem needs.
enum Instance {
    Points {
        points: Vec<WeightedPoint>,
        targets: Vec<usize>,
    },
    Rects(Vec<WeightedRect>),
}

impl Instance {
    fn len(&self) -> usize {
        match self {
            Instance::Points { points, .. } => points.len(),
            Instance::Rects(r) => r.len(),
        }
    }
}

fn load(path: &Path, problem: Problem) -> Result<Instance, CliError> {
    let file = read_instance(path)?;
    match (file.records, problem) {
        (Records::Rects(r), Problem::WisRect) => Ok(Instance::Rects(r)),
        // an empty file parses as points; accept it for rectangles too
        (Records::Points { points, .. }, Problem::WisRect) if points.is_empty() => {
            Ok(Instance::Rects(Vec::new()))
        }
        (Records::Points { points, targets }, p) if p != Problem::WisRect => {
            Ok(Instance::Points { points, targets })
        }
        (_, p) => Err(CliError::Usage(format!(
            "{} does not hold the record kind {p} needs",
            path.display()
        ))),
    }
}

fn shifted(
    problem: Problem,
    inst: &Instance,
    eps: f64,
    lambda: Option<f64>,
    cfg: &SolverConfig,
) -> Result<Solution, CliError> {
    let sol = match (problem, inst) {
        (Problem::WisUdg, Instance::Points { points, .. }) => wis_shifted(points, eps, cfg)?,
        (Problem::DsUdg, Instance::Points { points, .. }) => ds_shifted(points, eps, cfg)?,
        (Problem::PdsUdg, Instance::Points { points, targets }) => {
            let inst = PdsInstance {
                points: points.clone(),
                targets: targets.clone(),
            };
            pds_shifted(&inst, eps, cfg)?
        }
        (Problem::VcUdg, Instance::Points { points, .. }) => vc_shifted(points, eps, cfg)?,
        (Problem::WisRect, Instance::Rects(rects)) => {
            let lambda = lambda.ok_or_else(|| CliError::Usage("wis-rect requires --lambda".into()))?;
            wis_rect_shifted(rects, eps, lambda, cfg)?
        }
        _ => unreachable!("load matches instance kind to problem"),
    };
    Ok(sol)
}

fn exact(problem: Problem, inst: &Instance, cfg: &SolverConfig) -> Result<Solution, CliError> {
    let sol = match (problem, inst) {
        (Problem::WisUdg, Instance::Points { points, .. }) => exact_mwis_udg(points, cfg)?,
        (Problem::DsUdg, Instance::Points { points, .. }) => {
            let mut s = exact_min_pds(points, points, cfg)?;
            s.kind = Problem::DsUdg;
            s
        }
        (Problem::PdsUdg, Instance::Points { points, targets }) => {
            let tpts: Vec<WeightedPoint> = points
                .iter()
                .filter(|p| targets.contains(&p.idx))
                .copied()
                .collect();
            exact_min_pds(points, &tpts, cfg)?
        }
        (Problem::VcUdg, Instance::Points { points, .. }) => exact_min_vc_udg(points, cfg)?,
        (Problem::WisRect, Instance::Rects(rects)) => exact_mwis_rect(rects, cfg)?,
        _ => unreachable!("load matches instance kind to problem"),
    };
    Ok(sol)
}

/// Recomputes feasibility from scratch with the independent checkers.
fn feasible(problem: Problem, inst: &Instance, sol: &Solution) -> bool {
    match (problem, inst) {
        (Problem::WisUdg, Instance::Points { points, .. }) => {
            check_independent(points, &sol.indices).is_ok()
        }
        (Problem::DsUdg, Instance::Points { points, .. }) => {
            let all: Vec<usize> = points.iter().map(|p| p.idx).collect();
            check_dominating(points, &all, &sol.indices).is_ok()
        }
        (Problem::PdsUdg, Instance::Points { points, targets }) => {
            check_dominating(points, targets, &sol.indices).is_ok()
        }
        (Problem::VcUdg, Instance::Points { points, .. }) => {
            check_vertex_cover(points, &sol.indices).is_ok()
        }
        (Problem::WisRect, Instance::Rects(rects)) => {
            check_rect_independent(rects, &sol.indices).is_ok()
        }
        _ => false,
    }
}

fn finish(report: SolveReport, json: Option<&Path>) -> Result<(), CliError> {
    let ok = report.feasible;
    emit(&report, json)?;
    if ok {
        Ok(())
    } else {
        Err(CliError::Violation("solution failed the feasibility check".into()))
    }
}

pub fn solve(a: &SolveArgs) -> Result<(), CliError> {
    if a.problem == Problem::WisRect && a.lambda.is_none() {
        return Err(CliError::Usage("wis-rect requires --lambda".into()));
    }
    let inst = load(&a.input, a.problem)?;
    let sol = shifted(a.problem, &inst, a.eps, a.lambda, &a.solver.config())?;
    let ok = feasible(a.problem, &inst, &sol);
    finish(
        SolveReport::new(a.problem, Some(a.eps), inst.len(), sol, ok),
        a.json.as_deref(),
    )
}

pub fn oracle(a: &OracleArgs) -> Result<(), CliError> {
    let inst = load(&a.input, a.problem)?;
    if let (Instance::Rects(rects), Some(l)) = (&inst, a.lambda) {
        shifting_coresets::geom::validate_rects(rects, Some(l))?;
    }
    let start = Instant::now();
    let mut sol = exact(a.problem, &inst, &a.solver.config())?;
    sol.meta.elapsed = start.elapsed();
    let ok = feasible(a.problem, &inst, &sol);
    let mut report = SolveReport::new(a.problem, a.eps, inst.len(), sol, ok);
    report.exact = Some(true);
    finish(report, a.json.as_deref())
}

fn random_instance(problem: Problem, n: usize, side: f64, lambda: f64, seed: u64) -> Result<Instance, CliError> {
    Ok(match problem {
        Problem::WisRect => Instance::Rects(gen_uniform_rects(n, side, lambda, seed)?),
        Problem::WisUdg => Instance::Points {
            targets: (0..n).collect(),
            points: gen_uniform_points(n, side, (0.5, 2.0), seed)?,
        },
        Problem::PdsUdg => {
            let mut rng = Rng::new(seed ^ 0xD1B5_4A32_D192_ED03);
            Instance::Points {
                targets: (0..n).filter(|_| rng.uniform() < 0.5).collect(),
                points: gen_uniform_points(n, side, (1.0, 1.0), seed)?,
            }
        }
        Problem::DsUdg | Problem::VcUdg => Instance::Points {
            targets: (0..n).collect(),
            points: gen_uniform_points(n, side, (1.0, 1.0), seed)?,
        },
    })
}

/// How far `sol` is from `opt`, as a factor >= 1 when no better than optimal.
fn ratio(problem: Problem, sol: f64, opt: f64) -> f64 {
    let (num, den) = if problem.is_maximization() { (opt, sol) } else { (sol, opt) };
    if den == 0.0 {
        if num == 0.0 { 1.0 } else { f64::INFINITY }
    } else {
        num / den
    }
}

pub fn verify(a: &VerifyArgs) -> Result<(), CliError> {
    let cfg = a.solver.config();
    let side = a.box_side.unwrap_or(1.5 * (a.n as f64).sqrt()).max(1.0);
    let bound = a.problem.guarantee(a.eps);
    let lambda = Some(a.lambda);
    let mut ratios = Vec::with_capacity(a.trials);
    let mut violations = Vec::new();
    let mut infeasible = Vec::new();
    for trial in 0..a.trials {
        let inst = random_instance(a.problem, a.n, side, a.lambda, a.seed.wrapping_add(trial as u64))?;
        let sol = shifted(a.problem, &inst, a.eps, lambda, &cfg)?;
        let opt = exact(a.problem, &inst, &cfg)?;
        if !feasible(a.problem, &inst, &sol) {
            infeasible.push(trial);
        }
        let r = ratio(a.problem, sol.objective, opt.objective);
        if r > bound * (1.0 + RATIO_SLACK) {
            violations.push(trial);
        }
        ratios.push(r);
    }
    let (min, mean, max) = if ratios.is_empty() {
        (None, None, None)
    } else {
        (
            ratios.iter().copied().reduce(f64::min),
            Some(ratios.iter().sum::<f64>() / ratios.len() as f64),
            ratios.iter().copied().reduce(f64::max),
        )
    };
    let failed = !violations.is_empty() || !infeasible.is_empty();
    let report = VerifyReport {
        problem: a.problem.name(),
        eps: a.eps,
        n: a.n,
        trials: a.trials,
        seed: a.seed,
        bound,
        min_ratio: min,
        mean_ratio: mean,
        max_ratio: max,
        violations,
        infeasible,
    };
    emit(&report, a.json.as_deref())?;
    if failed {
        Err(CliError::Violation(format!(
            "{} trial(s) broke the guarantee or feasibility",
            report.violations.len() + report.infeasible.len()
        )))
    } else {
        Ok(())
    }
}

pub fn gen(a: &GenArgs) -> Result<(), CliError> {
    let file = match a.kind {
        GenKind::Uniform => InstanceFile::points(gen_uniform_points(a.n, a.box_side, a.weights, a.seed)?),
        GenKind::Clustered => InstanceFile::points(gen_clustered_points(
            a.clusters, a.n, a.radius, a.box_side, a.seed,
        )?),
        GenKind::Rects => InstanceFile::rects(
            gen_uniform_rects(a.n, a.box_side, a.lambda, a.seed)?,
            Some(a.lambda),
        ),
    };
    write_instance(&a.out, &file)?;
    Ok(())
}

fn baseline(problem: Problem, inst: &Instance) -> Result<Option<f64>, CliError> {
    let Instance::Points { points, .. } = inst else {
        return Ok(None);
    };
    Ok(match problem {
        Problem::WisUdg => Some(greedy_wis_udg(points)?.objective),
        Problem::DsUdg => Some(greedy_ds_udg(points)?.objective),
        // complement of a maximal independent set
        Problem::VcUdg => Some((points.len() - greedy_wis_udg(points)?.len()) as f64),
        _ => None,
    })
}

pub fn bench(a: &BenchArgs) -> Result<(), CliError> {
    if !(a.density > 0.0 && a.density.is_finite()) {
        return Err(CliError::Usage(format!("density must be positive, got {}", a.density)));
    }
    if a.repeats == 0 {
        return Err(CliError::Usage("repeats must be at least 1".into()));
    }
    let cfg = a.solver.config();
    let mut out = String::from("problem,n,eps,k,elapsed_ms,objective,baseline_objective,time_per_point_ns\n");
    for &n in &a.sizes {
        let side = (n as f64 / a.density).sqrt().max(1.0);
        let inst = random_instance(a.problem, n, side, a.lambda, a.seed)?;
        let mut times: Vec<Duration> = Vec::with_capacity(a.repeats);
        let mut last = None;
        for _ in 0..a.repeats {
            let t = Instant::now();
            let sol = shifted(a.problem, &inst, a.eps, Some(a.lambda), &cfg)?;
            times.push(t.elapsed());
            last = Some(sol);
        }
        times.sort();
        let median = times[times.len() / 2];
        let sol = last.expect("repeats >= 1");
        let base = baseline(a.problem, &inst)?;
        let ms = median.as_secs_f64() * 1e3;
        let _ = writeln!(
            out,
            "{},{},{},{},{:.3},{},{},{:.1}",
            a.problem,
            n,
            a.eps,
            sol.meta.k.map_or(String::new(), |k| k.to_string()),
            ms,
            sol.objective,
            base.map_or(String::new(), |b| b.to_string()),
            if n == 0 { 0.0 } else { ms * 1e6 / n as f64 },
        );
        log::info!("{} n={n}: {ms:.1} ms", a.problem);
    }
    match &a.csv {
        Some(p) => std::fs::write(p, out).map_err(|e| CliError::Solver(e.into())),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}
