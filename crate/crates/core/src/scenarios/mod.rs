//! Named example algebras and executable checks of the claims made about them.

pub mod builders;
mod families;
mod power_series;
mod report;
mod tower;

pub use builders::*;
pub use families::{
    run_alternating, run_modp_lie, run_two_dim_solvable, run_upper_triangular, run_wiwi, run_xixi, run_xwi,
    series_agree,
};
pub use power_series::{
    run_es_pmc, run_y_xy_yx, run_y_xyz, y_xy_yx_binomial, y_xy_yx_geometric, y_xy_yx_rank, y_xyz_element, y_xyz_rank,
};
pub use report::{ScenarioReport, Verdict};
pub use tower::{build_stage, functoriality_holds, projection, run_tower, Stage, TOWER_FAMILIES};

use crate::error::{Error, Result};
use crate::exactmath::Field;
use crate::freetrunc::DEFAULT_MAX_DIM;

/// Optional overrides; unset values fall back to each scenario's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScenarioParams {
    pub degree: Option<usize>,
    pub prime: Option<u64>,
    pub n: Option<usize>,
    pub max_dim: Option<usize>,
}

impl ScenarioParams {
    fn max_dim(&self) -> usize {
        self.max_dim.unwrap_or(DEFAULT_MAX_DIM)
    }
}

pub struct ScenarioInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub defaults: &'static str,
    run: fn(&ScenarioParams) -> Result<ScenarioReport>,
}

impl ScenarioInfo {
    pub fn run(&self, params: &ScenarioParams) -> Result<ScenarioReport> {
        (self.run)(params)
    }
}

fn degree(p: &ScenarioParams, default: usize) -> usize {
    p.degree.unwrap_or(default)
}

fn field_of(p: &ScenarioParams) -> Result<Field> {
    p.prime.map_or(Ok(Field::rationals()), Field::prime)
}

static REGISTRY: &[ScenarioInfo] = &[
    ScenarioInfo {
        name: "xixi",
        summary: "x_m x_m = x_{m+1}: extremal values of N1, N2, N3",
        defaults: "--n 7",
        run: |p| run_xixi(p.n.unwrap_or(7)),
    },
    ScenarioInfo {
        name: "y-xyz",
        summary: "y = (1 - l_x r_z)^(-1)(w) on subwords of x^i w z^j",
        defaults: "--degree 8",
        run: |p| run_y_xyz(degree(p, 8), p.max_dim()),
    },
    ScenarioInfo {
        name: "y-xy-yx",
        summary: "y = (1 - l_x + r_x)^(-1)(w) modulo w x^i w",
        defaults: "--degree 6",
        run: |p| run_y_xy_yx(degree(p, 6), p.max_dim()),
    },
    ScenarioInfo {
        name: "y-xy",
        summary: "x w_i = w_{i+1}: M_r(A)^2 = 0 while M_l(A) has large index",
        defaults: "--degree 6",
        run: |p| run_xwi(degree(p, 6)),
    },
    ScenarioInfo {
        name: "y-yy",
        summary: "w_i w_i = w_{i+1}: y - y^2 = w_0",
        defaults: "--degree 6",
        run: |p| run_wiwi(degree(p, 6)),
    },
    ScenarioInfo {
        name: "alternating",
        summary: "x w_{2i} = w_{2i+1}, w_{2i+1} x = w_{2i+2}: left and right nilpotent",
        defaults: "--degree 8",
        run: |p| run_alternating(degree(p, 8)),
    },
    ScenarioInfo {
        name: "modp-lie",
        summary: "(p+2)-dimensional solvable Lie algebra over F_p with B^(1) not nilpotent",
        defaults: "--prime 5",
        run: |p| run_modp_lie(p.prime.unwrap_or(5)),
    },
    ScenarioInfo {
        name: "two-dim-solvable",
        summary: "[x, y] = y: solvable, not nilpotent",
        defaults: "",
        run: |_| run_two_dim_solvable(),
    },
    ScenarioInfo {
        name: "upper-triangular",
        summary: "strictly upper-triangular Lie algebras: weak and strong series coincide",
        defaults: "--n 4 (Q unless --prime)",
        run: |p| run_upper_triangular(p.n.unwrap_or(4), field_of(p)?),
    },
    ScenarioInfo {
        name: "es-pmc",
        summary: "y - x y^2 x in the free algebra on x, y: finite-stage facts only",
        defaults: "--degree 5",
        run: |p| run_es_pmc(degree(p, 5), p.max_dim()),
    },
];

pub fn registry() -> &'static [ScenarioInfo] {
    REGISTRY
}

pub fn scenario_names() -> Vec<String> {
    REGISTRY.iter().map(|s| s.name.to_string()).collect()
}

pub fn lookup(name: &str) -> Result<&'static ScenarioInfo> {
    REGISTRY
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownScenario { name: name.to_string(), registered: scenario_names() })
}

pub fn run_scenario(name: &str, params: &ScenarioParams) -> Result<ScenarioReport> {
    lookup(name)?.run(params)
}

/// Runs every registered scenario (in parallel) with `params` applied to each;
/// results come back in registry order, and errors are kept per scenario.
pub fn run_all(params: &ScenarioParams) -> Vec<(&'static str, Result<ScenarioReport>)> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = REGISTRY.iter().map(|s| (s.name, scope.spawn(move || s.run(params)))).collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                (name, h.join().unwrap_or_else(|_| Err(Error::Invariant(format!("scenario {name} panicked")))))
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_all_pass() {
        for (name, result) in run_all(&ScenarioParams::default()) {
            let report = result.unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(report.passed(), "{report}");
            assert!(report.verdicts.iter().all(|v| !v.citation.is_empty()));
        }
    }

    #[test]
    fn degree_one_edge_cases() {
        let params = ScenarioParams { degree: Some(1), ..Default::default() };
        for (name, result) in run_all(&params) {
            let report = result.unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn unknown_name_lists_registry() {
        match run_scenario("nope", &ScenarioParams::default()) {
            Err(Error::UnknownScenario { registered, .. }) => assert_eq!(registered, scenario_names()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn report_json_round_trip() {
        let report = run_scenario("modp-lie", &ScenarioParams { prime: Some(3), ..Default::default() }).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: ScenarioReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["scenario", "parameters", "verdicts", "witnesses", "runtime_ms"] {
            assert!(value.get(key).is_some(), "{key}");
        }
    }
}
