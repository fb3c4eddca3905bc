//! Browser bindings for the demo page in `www/`.
//!
//! Every exported function takes and returns JSON strings; the plain
//! functions in [`api`] hold the logic so they can be tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use qls_core::constructions::{achievable_set, execute, plan_cardinality};
    use qls_core::io::{Metadata, QlsDocument};
    use qls_core::{qls_cardinality, verify_qls, Qls, Tolerance};
    use serde::Serialize;

    /// Larger squares are legal but make the page unresponsive.
    pub const MAX_ORDER: usize = 16;

    fn check_order(v: usize) -> Result<(), String> {
        if (2..=MAX_ORDER).contains(&v) {
            Ok(())
        } else {
            Err(format!("order must be between 2 and {MAX_ORDER}"))
        }
    }

    #[derive(Serialize)]
    struct PlanRow {
        c: usize,
        status: String,
        provenance: String,
    }

    pub fn plan(order: usize) -> Result<String, String> {
        check_order(order)?;
        let rows: Vec<PlanRow> = achievable_set(order)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|a| PlanRow {
                c: a.c,
                status: a.status.to_string(),
                provenance: a.provenance,
            })
            .collect();
        Ok(serde_json::to_string(&rows).expect("serializable"))
    }

    #[derive(Serialize)]
    struct Built {
        method: String,
        provenance: String,
        predicted: usize,
        measured: usize,
        /// Phase class of each cell, row-major, for colouring the grid.
        class_of: Vec<usize>,
        document: QlsDocument,
    }

    pub fn construct(order: usize, cardinality: usize) -> Result<String, String> {
        check_order(order)?;
        let plan = plan_cardinality(order, cardinality).map_err(|e| e.to_string())?;
        let q = execute(&plan).map_err(|e| e.to_string())?;
        let rep = qls_cardinality(&q, &Tolerance::default()).map_err(|e| e.to_string())?;
        let meta = Metadata {
            method: Some(plan.method),
            parameters: Some(plan.parameters),
            claimed_cardinality: Some(plan.predicted_c()),
        };
        let out = Built {
            method: plan.method.to_string(),
            provenance: plan.provenance(),
            predicted: plan.predicted_c(),
            measured: rep.c,
            class_of: rep.class_of,
            document: QlsDocument::from_qls(&q, Some(meta)),
        };
        Ok(serde_json::to_string(&out).expect("serializable"))
    }

    #[derive(Serialize)]
    struct Checked {
        valid: bool,
        worst_deviation: f64,
        failure: Option<String>,
        cardinality: Option<usize>,
        class_of: Option<Vec<usize>>,
        error: Option<String>,
    }

    /// Verifies a pasted document; malformed JSON is an `Err`, a square that
    /// fails the checks is an `Ok` report with `valid: false`.
    pub fn verify(document: &str) -> Result<String, String> {
        let tol = Tolerance::default();
        let doc = QlsDocument::from_json(document).map_err(|e| e.to_string())?;
        let grid = doc.to_grid().map_err(|e| e.to_string())?;
        let rep = verify_qls(&grid, &tol).map_err(|e| e.to_string())?;
        let mut out = Checked {
            valid: rep.pass,
            worst_deviation: rep.worst_deviation(),
            failure: rep.first_failure.map(|f| format!("{:?} at {:?}", f.kind, f.indices)),
            cardinality: None,
            class_of: None,
            error: None,
        };
        if rep.pass {
            let q = Qls::new(grid, &tol).map_err(|e| e.to_string())?;
            match qls_cardinality(&q, &tol) {
                Ok(r) => {
                    out.cardinality = Some(r.c);
                    out.class_of = Some(r.class_of);
                }
                Err(e) => out.error = Some(e.to_string()),
            }
        }
        Ok(serde_json::to_string(&out).expect("serializable"))
    }
}

#[wasm_bindgen]
pub fn plan(order: usize) -> Result<String, JsValue> {
    api::plan(order).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn construct(order: usize, cardinality: usize) -> Result<String, JsValue> {
    api::construct(order, cardinality).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(document: &str) -> Result<String, JsValue> {
    api::verify(document).map_err(|e| JsValue::from_str(&e))
}
