//! Choosing a construction and its parameters for a target cardinality.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::blocks::{BlockSpec, CardinalityAccounting, Contribution};
use super::slots::solve_slots;
use super::{direct_product_qls, maximal_qls, wilson1_qls, wilson_qls};
use crate::catalog;
use crate::error::{Error, Result};
use crate::latin::{cyclic_ls, idempotent_ls, ols_pair};
use crate::square::{classical_qls, Qls};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Classical,
    Maximal,
    DirectProduct,
    Wilson1,
    Wilson,
    Catalog,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Method::Classical => "classical",
            Method::Maximal => "maximal",
            Method::DirectProduct => "direct_product",
            Method::Wilson1 => "wilson1",
            Method::Wilson => "wilson",
            Method::Catalog => "catalog",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_id: Option<usize>,
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, val) in [("m", self.m), ("t", self.t), ("s", self.s), ("case", self.case_id)] {
            if let Some(x) = val {
                parts.push(format!("{name}={x}"));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub order: usize,
    pub method: Method,
    pub parameters: Parameters,
    pub blocks: BlockSpec,
    pub accounting: CardinalityAccounting,
}

impl ConstructionPlan {
    pub fn predicted_c(&self) -> usize {
        self.accounting.predicted_c
    }

    /// Short human-readable certificate, e.g. `direct product m=2 t=4`.
    pub fn provenance(&self) -> String {
        let name = match self.method {
            Method::Classical => "classical embedding",
            Method::Maximal => "Fourier maximal construction",
            Method::DirectProduct => "direct product",
            Method::Wilson1 => "Wilson construction, order mt+1",
            Method::Wilson => "Wilson construction, order mt+s",
            Method::Catalog => "order-8 catalog",
        };
        let p = self.parameters.to_string();
        if p.is_empty() {
            name.to_string()
        } else {
            format!("{name} {p}")
        }
    }
}

/// Builds the square a plan describes.
pub fn execute(plan: &ConstructionPlan) -> Result<Qls> {
    let p = &plan.parameters;
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Error::InvalidParameters(format!("plan is missing parameter {name}")))
    };
    match plan.method {
        Method::Classical => Ok(classical_qls(&cyclic_ls(plan.order))),
        Method::Maximal => maximal_qls(plan.order),
        Method::DirectProduct => direct_product_qls(need(p.m, "m")?, need(p.t, "t")?, &plan.blocks),
        Method::Wilson1 => wilson1_qls(need(p.m, "m")?, need(p.t, "t")?, &plan.blocks),
        Method::Wilson => wilson_qls(need(p.m, "m")?, need(p.t, "t")?, need(p.s, "s")?, &plan.blocks),
        Method::Catalog => catalog::build_case(need(p.case_id, "case")?),
    }
}

fn unachievable(order: usize, c: usize, reason: impl Into<String>) -> Error {
    Error::Unachievable {
        order,
        cardinality: c,
        reason: reason.into(),
    }
}

fn unknown(order: usize, c: usize, reason: impl Into<String>) -> Error {
    Error::UnknownAchievability {
        order,
        cardinality: c,
        reason: reason.into(),
    }
}

/// Common range checks; returns the extra count `c - v` to distribute.
fn range(v: usize, c: usize, max: usize, what: &str) -> Result<usize> {
    if c < v || c > max {
        return Err(unachievable(v, c, format!("{what} reaches only [{v}, {max}]")));
    }
    if c == v + 1 {
        return Err(unachievable(v, c, format!("{what} cannot add exactly one vector")));
    }
    Ok(c - v)
}

fn split(values: &[usize], rows: usize, width: usize) -> Vec<Vec<usize>> {
    values[..rows * width].chunks(width).map(<[usize]>::to_vec).collect()
}

pub fn plan_classical(v: usize) -> Result<ConstructionPlan> {
    if v == 0 {
        return Err(Error::InvalidParameters("order must be positive".into()));
    }
    Ok(ConstructionPlan {
        order: v,
        method: Method::Classical,
        parameters: Parameters::default(),
        blocks: BlockSpec::None,
        accounting: CardinalityAccounting::new(v, Vec::new()),
    })
}

pub fn plan_maximal(v: usize) -> Result<ConstructionPlan> {
    if v < 4 {
        return Err(Error::OrderTooSmall { order: v, min: 4 });
    }
    Ok(ConstructionPlan {
        order: v,
        method: Method::Maximal,
        parameters: Parameters::default(),
        blocks: BlockSpec::None,
        accounting: CardinalityAccounting::new(
            v,
            vec![Contribution {
                slot: "fourier phases".into(),
                count: v * v - v,
            }],
        ),
    })
}

/// Direct product of orders `m` and `t`, realizing any `c` in `[mt, mt^2]`
/// other than `mt + 1`; for `m = 2` only even values.
pub fn plan_direct_product(m: usize, t: usize, c: usize) -> Result<ConstructionPlan> {
    super::direct_product::check_params(m, t)?;
    let v = m * t;
    let extra = range(v, c, m * t * t, "the direct product")?;
    let caps = vec![m; (t - 1) * t];
    let values = solve_slots(&caps, extra).ok_or_else(|| {
        unachievable(v, c, format!("blocks of size 2..={m} cannot sum to {extra}"))
    })?;
    let blocks = BlockSpec::direct_product(m, t, &split(&values, t - 1, t))?;
    Ok(ConstructionPlan {
        order: v,
        method: Method::DirectProduct,
        parameters: Parameters { m: Some(m), t: Some(t), ..Default::default() },
        accounting: blocks.accounting(v),
        blocks,
    })
}

/// Order `mt + 1`, realizing any `c` in `[mt + 1, mt^2 + 2]` other than `mt + 2`.
pub fn plan_wilson1(m: usize, t: usize, c: usize) -> Result<ConstructionPlan> {
    super::wilson1::check_params(m, t)?;
    idempotent_ls(t)?;
    let v = m * t + 1;
    let extra = range(v, c, m * t * t + 2, "the order mt+1 construction")?;
    let n_rot = (t - 1) * (t - 1);
    let mut caps = vec![m; n_rot + (t - 2)];
    caps.push(m + 1);
    let values = solve_slots(&caps, extra)
        .ok_or_else(|| unachievable(v, c, format!("no slot assignment sums to {extra}")))?;
    let blocks = BlockSpec::wilson1(
        m,
        t,
        &split(&values, t - 1, t - 1),
        &values[n_rot..n_rot + t - 2],
        values[n_rot + t - 2],
    )?;
    Ok(ConstructionPlan {
        order: v,
        method: Method::Wilson1,
        parameters: Parameters { m: Some(m), t: Some(t), ..Default::default() },
        accounting: blocks.accounting(v),
        blocks,
    })
}

/// Order `mt + s`, realizing any `c` in `[mt + s, mt^2 + 2s]` other than
/// `mt + s + 1`. With `m = s = 2` every block adds 0 or 2, so odd values are
/// left open rather than refused.
pub fn plan_wilson(m: usize, t: usize, s: usize, c: usize) -> Result<ConstructionPlan> {
    super::wilson::check_params(m, t, s)?;
    ols_pair(t)?;
    let v = m * t + s;
    let max = m * t * t + 2 * s;
    // Checked before the generic range test so that v + 1 is reported the
    // same way as the other odd values.
    if m == 2 && s == 2 && c % 2 == 1 && (v..=max).contains(&c) {
        return Err(unknown(v, c, "odd cardinalities are open for Wilson's construction with m = s = 2"));
    }
    let extra = range(v, c, max, "Wilson's construction")?;
    let n_rot = (t - 1) * t;
    let mut caps = vec![m; n_rot];
    caps.push(s);
    let values = solve_slots(&caps, extra)
        .ok_or_else(|| unachievable(v, c, format!("no slot assignment sums to {extra}")))?;
    let blocks = BlockSpec::wilson(m, t, s, &split(&values, t - 1, t), values[n_rot])?;
    Ok(ConstructionPlan {
        order: v,
        method: Method::Wilson,
        parameters: Parameters { m: Some(m), t: Some(t), s: Some(s), ..Default::default() },
        accounting: blocks.accounting(v),
        blocks,
    })
}

pub fn plan_catalog(c: usize) -> Result<ConstructionPlan> {
    let case = catalog::explicit_case(c).ok_or_else(|| Error::NotInCatalog {
        cardinality: c,
        reason: "no explicit order-8 square with this cardinality".into(),
    })?;
    Ok(ConstructionPlan {
        order: 8,
        method: Method::Catalog,
        parameters: Parameters { case_id: Some(case), ..Default::default() },
        blocks: BlockSpec::None,
        accounting: CardinalityAccounting::new(
            8,
            vec![Contribution {
                slot: format!("catalog case {case}"),
                count: c - 8,
            }],
        ),
    })
}

/// Values that no square can have; `None` when `c` is not ruled out.
pub fn exclusion_reason(v: usize, c: usize) -> Option<String> {
    if c < v || c > v * v {
        Some(format!("cardinality of an order-{v} square lies in [{v}, {}]", v * v))
    } else if c == v + 1 {
        Some("no quantum Latin square has cardinality v + 1".into())
    } else if v <= 3 && c > v {
        Some("orders 2 and 3 admit only classical squares".into())
    } else {
        None
    }
}

/// Candidate parameter sets in preference order, each with its planner.
fn candidates(v: usize) -> Vec<(Method, Parameters)> {
    let mut out = Vec::new();
    for m in 2..=v / 2 {
        if v % m == 0 {
            out.push((Method::DirectProduct, Parameters { m: Some(m), t: Some(v / m), ..Default::default() }));
        }
    }
    for m in 2..v {
        if (v - 1) % m == 0 && (v - 1) / m >= 3 {
            out.push((Method::Wilson1, Parameters { m: Some(m), t: Some((v - 1) / m), ..Default::default() }));
        }
    }
    for m in 2..v {
        for t in 3..=v / m {
            let s = v - m * t;
            if s >= 2 && s < t {
                out.push((Method::Wilson, Parameters { m: Some(m), t: Some(t), s: Some(s), ..Default::default() }));
            }
        }
    }
    out
}

fn plan_candidate(method: Method, p: &Parameters, c: usize) -> Result<ConstructionPlan> {
    let (m, t) = (p.m.unwrap_or(0), p.t.unwrap_or(0));
    match method {
        Method::DirectProduct => plan_direct_product(m, t, c),
        Method::Wilson1 => plan_wilson1(m, t, c),
        Method::Wilson => plan_wilson(m, t, p.s.unwrap_or(0), c),
        _ => unreachable!("only recursive methods are searched"),
    }
}

/// Picks the first method, in the order classical, maximal, direct product,
/// order mt+1, order mt+s, catalog, that certifies cardinality `c`.
pub fn plan_cardinality(v: usize, c: usize) -> Result<ConstructionPlan> {
    if v < 2 {
        return Err(Error::OrderTooSmall { order: v, min: 2 });
    }
    if let Some(reason) = exclusion_reason(v, c) {
        return Err(unachievable(v, c, reason));
    }
    if c == v {
        return plan_classical(v);
    }
    if c == v * v {
        return plan_maximal(v);
    }
    let mut open = None;
    for (method, p) in candidates(v) {
        match plan_candidate(method, &p, c) {
            Ok(plan) => return Ok(plan),
            Err(e @ Error::UnknownAchievability { .. }) => {
                open.get_or_insert(e);
            }
            Err(_) => {}
        }
    }
    if v == 8 {
        if let Ok(plan) = plan_catalog(c) {
            return Ok(plan);
        }
        if catalog::OPEN_VALUES.contains(&c) {
            return Err(unknown(v, c, "no order-8 square with this cardinality is known"));
        }
    }
    Err(open.unwrap_or_else(|| unknown(v, c, "no supported construction certifies this cardinality")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Achievable,
    Excluded,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Achievable => "achievable",
            Status::Excluded => "excluded",
            Status::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Achievability {
    pub c: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    pub provenance: String,
}

/// Status of every `c` in `[v, v^2]` with the construction or argument behind it.
pub fn achievable_set(v: usize) -> Result<Vec<Achievability>> {
    if v < 2 {
        return Err(Error::OrderTooSmall { order: v, min: 2 });
    }
    Ok((v..=v * v)
        .map(|c| match plan_cardinality(v, c) {
            Ok(plan) => Achievability {
                c,
                status: Status::Achievable,
                method: Some(plan.method),
                provenance: plan.provenance(),
            },
            Err(Error::Unachievable { reason, .. }) => Achievability {
                c,
                status: Status::Excluded,
                method: None,
                provenance: reason,
            },
            Err(e) => Achievability {
                c,
                status: Status::Unknown,
                method: None,
                provenance: match e {
                    Error::UnknownAchievability { reason, .. } => reason,
                    other => other.to_string(),
                },
            },
        })
        .collect())
}
