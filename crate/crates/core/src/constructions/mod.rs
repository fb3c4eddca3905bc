//! The four constructions and the planner that chooses between them.

mod blocks;
mod canvas;
mod direct_product;
mod maximal;
mod planner;
mod slots;
mod wilson;
mod wilson1;

pub use blocks::{BlockSpec, CardinalityAccounting, Contribution, PhasedBlock};
pub use direct_product::{direct_product_qls, direct_product_qls_with};
pub use maximal::{maximal_cell, maximal_qls};
pub use planner::{
    achievable_set, exclusion_reason, execute, plan_cardinality, plan_catalog, plan_classical, plan_direct_product,
    plan_maximal, plan_wilson, plan_wilson1, Achievability, ConstructionPlan, Method, Parameters, Status,
};
pub use slots::solve_slots;
pub use wilson::{wilson_qls, wilson_qls_with};
pub use wilson1::{wilson1_qls, wilson1_qls_with};
