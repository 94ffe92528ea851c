//! JSON-serialisable checks shared by the command line and the C interface.
//!
//! Every report has a `check` field describing the identity it tests and a
//! verdict that decides the exit status.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::certify::{
    coclique_divisibility_constraint, profile_solutions, quotient_null_vectors,
    row_constraint_violation, row_support_bound, verify_certificate, Certificate, Profile,
    ProfileQuery, RamseyTable, Verdict,
};
use crate::constructions::{
    count_pentagons, enumerate_petersen_subgraphs, extend_by_dominating_clique, gq39_complement,
    hoffman_singleton, is_petersen, mclaughlin_complement, pentagon_partitions, pentagons,
    petersen_meeting_each_in, verify_pentagon_structure,
};
use crate::design::{lambda_s, Design};
use crate::error::{Error, Result};
use crate::graph::{
    complement_params, floor_theta_min, is_equitable, is_srg, max_coclique, psd_shift_check,
    rank_of_shift, srg_identity_holds, srg_spectrum, vertex_partition, Graph, SrgParams,
};

#[derive(Clone, Debug, Serialize)]
pub struct SrgReport {
    pub check: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub params: Option<SrgParams>,
    pub identity_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complement: Option<SrgParams>,
    pub floor_theta_min: i64,
}

impl SrgReport {
    pub fn verified(&self) -> bool {
        self.params.is_some() && self.identity_holds
    }
}

pub fn srg_report(g: &Graph) -> SrgReport {
    let params = is_srg(g);
    SrgReport {
        check: "A^2 = kI + lambda A + mu (J - I - A)",
        vertices: g.order(),
        edges: g.edge_count(),
        params,
        identity_holds: params.is_some_and(|p| srg_identity_holds(g, &p)),
        spectrum: params
            .and_then(|p| srg_spectrum(&p).ok())
            .map(|s| s.to_string()),
        complement: params.and_then(|p| complement_params(&p).ok()),
        floor_theta_min: floor_theta_min(g),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DesignReport {
    pub check: &'static str,
    pub points: usize,
    pub blocks: usize,
    pub block_size: usize,
    /// Largest `t` for which the blocks form a `t`-design.
    pub strength: usize,
    /// `λ_s` for `s = 1..=strength`, from direct counting.
    pub lambdas: Vec<u64>,
    /// Whether the counted `λ_s` agree with `λ·C(v−s, t−s)/C(k−s, t−s)`.
    pub lambda_formula_holds: bool,
    pub intersection_numbers: Vec<usize>,
}

impl DesignReport {
    pub fn verified(&self) -> bool {
        self.strength >= 2 && self.lambda_formula_holds
    }
}

pub fn design_report(d: &Design) -> DesignReport {
    let k = d.block_size();
    let mut lambdas = Vec::new();
    for t in 1..=k.min(d.point_count()) {
        match d.t_design_lambda(t) {
            Some(l) => lambdas.push(l),
            None => break,
        }
    }
    let strength = lambdas.len();
    let lambda_formula_holds = d.params(strength).is_none_or(|p| {
        (1..=strength).all(|s| {
            lambda_s(&p, s as u64)
                .is_ok_and(|r| r.is_integer() && r.to_integer() == lambdas[s - 1] as i128)
        })
    });
    DesignReport {
        check: "every t-subset of points lies in the same number of blocks",
        points: d.point_count(),
        blocks: d.block_count(),
        block_size: k,
        strength,
        lambdas,
        lambda_formula_holds,
        intersection_numbers: d
            .intersection_numbers()
            .map(|s| s.into_iter().collect())
            .unwrap_or_default(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    pub check: &'static str,
    pub scale: i64,
    pub shift: i64,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// First failed row constraint; checked only for accepted certificates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub row_constraint_violation: Option<String>,
}

impl CertificateReport {
    pub fn verified(&self) -> bool {
        self.verdict.accepted
    }
}

pub fn certificate_report(g: &Graph, c: &Certificate) -> Result<CertificateReport> {
    let verdict = verify_certificate(g, c)?;
    let row_constraint_violation = if verdict.accepted {
        row_constraint_violation(g, c)
    } else {
        None
    };
    Ok(CertificateReport {
        check: "N^T N = s (A + t I)",
        scale: c.s,
        shift: c.t,
        verdict,
        row_constraint_violation,
    })
}

pub const EXPECTED_PENTAGONS: usize = 1260;
pub const EXPECTED_PENTAGON_PARTITIONS: usize = 126;

#[derive(Clone, Debug, Serialize)]
pub struct PentagonsReport {
    pub check: &'static str,
    /// Distinct quotient matrices of the distance partitions at all vertices.
    pub vertex_quotients: Vec<Vec<Vec<i64>>>,
    pub pentagons: usize,
    pub expected_pentagons: usize,
    pub partitions: Option<usize>,
    pub expected_partitions: usize,
    /// Unions of a pentagon `(i,·)` with a pentagram `i'R·` inducing a Petersen graph.
    pub canonical_cross_unions_petersen: usize,
    pub pentagons_with_confirmed_neighbourhoods: usize,
    pub petersen_subgraphs: usize,
    /// Petersen subgraphs meeting each pentagon-pentagram pair in two vertices.
    pub obstruction_witnesses: usize,
    pub problems: Vec<String>,
}

impl PentagonsReport {
    pub fn verified(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Pentagon counts and structure in the Hoffman–Singleton graph.
pub fn pentagons_report(budget: u64) -> PentagonsReport {
    let g = hoffman_singleton();
    let mut problems = Vec::new();
    let mut quotients = BTreeSet::new();
    for x in 0..g.order() {
        match vertex_partition(&g, x)
            .ok()
            .and_then(|p| is_equitable(&g, &p))
        {
            Some(q) => {
                quotients.insert(q.as_integers().unwrap_or_default());
            }
            None => problems.push(format!("distance partition at {x} is not equitable")),
        }
    }
    if quotients.len() != 1 {
        problems.push(format!("{} distinct vertex quotients", quotients.len()));
    }
    let pents = pentagons(&g);
    debug_assert_eq!(pents.len(), count_pentagons(&g));
    if pents.len() != EXPECTED_PENTAGONS {
        problems.push(format!("{} pentagons", pents.len()));
    }
    let partitions = pentagon_partitions(&g, budget).count();
    match partitions {
        Some(EXPECTED_PENTAGON_PARTITIONS) => {}
        Some(c) => problems.push(format!("{c} pentagon partitions")),
        None => problems.push("partition count hit the budget".into()),
    }
    let pentagon = |i: usize| (5 * i..5 * i + 5).collect::<Vec<_>>();
    let pentagram = |i: usize| (25 + 5 * i..30 + 5 * i).collect::<Vec<_>>();
    let mut cross = 0;
    for i in 0..5 {
        for j in 0..5 {
            let union: Vec<usize> = pentagon(i).into_iter().chain(pentagram(j)).collect();
            cross += is_petersen(&g.induced(&union)) as usize;
        }
    }
    if cross != 25 {
        problems.push(format!("{cross} of 25 cross unions are Petersen graphs"));
    }
    let confirmed = pents
        .iter()
        .filter(|p| verify_pentagon_structure(&g, &p[..]).confirmed)
        .count();
    if confirmed != pents.len() {
        problems.push(format!(
            "{} pentagons fail the neighbourhood check",
            pents.len() - confirmed
        ));
    }
    let all = enumerate_petersen_subgraphs(&g);
    let fixed: Vec<Vec<usize>> = (0..5)
        .map(|i| pentagon(i).into_iter().chain(pentagram(i)).collect())
        .collect();
    for f in &fixed {
        if !all.contains(f) {
            problems.push(format!("{f:?} is not a listed Petersen subgraph"));
        }
    }
    let witnesses = petersen_meeting_each_in(&all, &fixed, 2).len();
    if witnesses != 0 {
        problems.push(format!(
            "{witnesses} Petersen subgraphs meet every fixed one in two vertices"
        ));
    }
    PentagonsReport {
        check: "pentagon counts, pentagon neighbourhoods and Petersen unions in the Hoffman-Singleton graph",
        vertex_quotients: quotients.into_iter().collect(),
        pentagons: pents.len(),
        expected_pentagons: EXPECTED_PENTAGONS,
        partitions,
        expected_partitions: EXPECTED_PENTAGON_PARTITIONS,
        canonical_cross_unions_petersen: cross,
        pentagons_with_confirmed_neighbourhoods: confirmed,
        petersen_subgraphs: all.len(),
        obstruction_witnesses: witnesses,
        problems,
    }
}

/// Minimum degree claimed in the literature for the McLaughlin complement
/// with a dominating triangle added.
pub const STATED_EXTENSION_MIN_DEGREE: usize = 166;

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub check: &'static str,
    pub added: usize,
    pub vertices: usize,
    pub min_degree: Option<usize>,
    pub stated_min_degree: usize,
    pub matches_stated_min_degree: bool,
    pub psd_shift_3: bool,
    pub note: String,
}

impl ExtensionReport {
    pub fn verified(&self) -> bool {
        self.psd_shift_3
    }
}

pub fn extension_report(added: usize) -> Result<ExtensionReport> {
    let h = extend_by_dominating_clique(&mclaughlin_complement(), added)?;
    let min_degree = h.min_degree();
    let matches = min_degree == Some(STATED_EXTENSION_MIN_DEGREE);
    let note = if matches {
        "computed minimum degree equals the stated value".to_string()
    } else {
        format!(
            "computed minimum degree {} differs from the stated {STATED_EXTENSION_MIN_DEGREE}: old vertices keep degree 162 + {added}",
            min_degree.map_or("none".into(), |d| d.to_string())
        )
    };
    Ok(ExtensionReport {
        check: "McLaughlin complement plus a dominating clique keeps A + 3I positive semidefinite",
        added,
        vertices: h.order(),
        min_degree,
        stated_min_degree: STATED_EXTENSION_MIN_DEGREE,
        matches_stated_min_degree: matches,
        psd_shift_3: psd_shift_check(&h, 3),
        note,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileTarget {
    /// Hoffman–Singleton graph.
    Hosi,
    /// Complement of the `GQ(3,9)` collinearity graph.
    Gq39c,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfilesReport {
    pub check: &'static str,
    pub target: &'static str,
    pub gamma_abs: i64,
    /// Quotient eigenvector `(u₁, u₂, u₃)` for the eigenvalue −3.
    pub eigenvector: [i64; 3],
    pub support_cap: i64,
    pub zeta_cap: Option<i64>,
    pub sigma_modulus: Option<i64>,
    pub solutions: Vec<Profile>,
    pub expected: Vec<Profile>,
    pub matches: bool,
}

fn profiles(items: &[(i64, i64, i64)]) -> Vec<Profile> {
    let mut v: Vec<Profile> = items
        .iter()
        .map(|&(g, d, z)| Profile::new(g, d, z))
        .collect();
    v.sort();
    v
}

/// Expected profile sets for a scale-2 shift-3 certificate row.
pub fn expected_profiles(target: ProfileTarget, gamma_abs: i64) -> Option<Vec<Profile>> {
    match (target, gamma_abs) {
        (ProfileTarget::Hosi, 1) => Some(profiles(&[
            (-1, -1, 12),
            (1, 3, 6),
            (1, 4, 15),
            (1, 2, -3),
            (-1, -2, 3),
        ])),
        (ProfileTarget::Hosi, 2) => Some(Vec::new()),
        (ProfileTarget::Gq39c, 1) => Some(profiles(&[
            (1, 27, 0),
            (-1, 9, 20),
            (1, 9, -10),
            (-1, -9, 10),
        ])),
        _ => None,
    }
}

/// Solves the profile equation with every constant derived from the graph:
/// the quotient eigenvector, Ramsey caps on triangle-free supports (for the
/// Hoffman–Singleton graph), and the rank bound plus coclique divisibility
/// (for the `GQ(3,9)` complement).
pub fn profiles_report(target: ProfileTarget, gamma_abs: i64) -> Result<ProfilesReport> {
    let expected = expected_profiles(target, gamma_abs).ok_or_else(|| {
        Error::Precondition(format!("no profile analysis for |gamma| = {gamma_abs}"))
    })?;
    let g = match target {
        ProfileTarget::Hosi => hoffman_singleton(),
        ProfileTarget::Gq39c => gq39_complement(),
    };
    let part = vertex_partition(&g, 0)?;
    let q = is_equitable(&g, &part).ok_or(Error::NotEquitable)?;
    let null = quotient_null_vectors(&q, 3);
    let [u] = null.as_slice() else {
        return Err(Error::NotEigenvector);
    };
    let u = [u[0], u[1], u[2]];
    let ramsey = RamseyTable::default();
    let r = |a, b| {
        ramsey
            .get(a, b)
            .map(i64::from)
            .ok_or_else(|| Error::Precondition("missing Ramsey value".into()))
    };
    let query = match target {
        ProfileTarget::Hosi => ProfileQuery {
            u,
            gamma_domain: vec![-gamma_abs, gamma_abs],
            // supports are triangle-free with cocliques of size at most 6, or 3
            // once an entry of absolute value 2 is present
            support_cap: if gamma_abs == 2 {
                r(3, 4)? - 1
            } else {
                r(3, 7)? - 1
            },
            zeta_cap: if gamma_abs == 2 {
                None
            } else {
                Some(r(3, 6)? - 1)
            },
            sigma_modulus: None,
            sigma_nonneg: true,
        },
        ProfileTarget::Gq39c => {
            let rank = rank_of_shift(&g, 3);
            let cap = row_support_bound(&g, 2, 3, rank)? as i64;
            let coclique = max_coclique(&g, u64::MAX);
            let div = coclique_divisibility_constraint(&g, coclique.witness(), 3)?;
            ProfileQuery {
                u,
                gamma_domain: vec![-gamma_abs, gamma_abs],
                support_cap: cap,
                zeta_cap: None,
                sigma_modulus: Some(div.modulus),
                sigma_nonneg: true,
            }
        }
    };
    let solutions: Vec<Profile> = profile_solutions(&query).into_iter().collect();
    Ok(ProfilesReport {
        check: "u1 gamma + u2 delta + u3 zeta = 0 with support caps",
        target: match target {
            ProfileTarget::Hosi => "hosi",
            ProfileTarget::Gq39c => "gq39c",
        },
        gamma_abs,
        eigenvector: u,
        support_cap: query.support_cap,
        zeta_cap: query.zeta_cap,
        sigma_modulus: query.sigma_modulus,
        matches: solutions == expected,
        solutions,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn srg_report_on_path_is_refuted() {
        let r = srg_report(&Graph::path(4));
        assert!(!r.verified());
        let r = srg_report(&Graph::cycle(5));
        assert!(r.verified());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["params"]["v"], 5);
        assert!(json["check"].is_string());
    }

    #[test]
    fn design_report_counts() {
        let r = design_report(&crate::design::sts15());
        assert_eq!(r.strength, 2);
        assert_eq!(r.lambdas, vec![7, 1]);
        assert!(r.verified());
        assert_eq!(r.intersection_numbers, vec![0, 1]);
    }

    #[test]
    fn profile_reports_match() {
        for (t, a) in [(ProfileTarget::Hosi, 1), (ProfileTarget::Hosi, 2)] {
            let r = profiles_report(t, a).unwrap();
            assert!(r.matches, "{:?}", r.solutions);
        }
        let r = profiles_report(ProfileTarget::Hosi, 1).unwrap();
        assert_eq!(r.eigenvector, [21, -9, 1]);
        assert!(profiles_report(ProfileTarget::Gq39c, 2).is_err());
    }
}
