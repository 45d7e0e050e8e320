//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes plain strings and returns a JSON string; failures come
//! back as `{"error": "..."}` so the page never has to catch exceptions.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use braid_dcp::dcp::{solve_dcp, DcpInstance, DcpOutcome};
use braid_dcp::simconj::SearchOptions;
use braid_dcp::strands::crossing_matrix;
use braid_dcp::{permutation_of, BraidWord, NormalForm};

/// One crossing of a diagram: at `step`, positions `position` and
/// `position + 1` swap, the left strand passing over when `positive`.
#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub step: usize,
    pub position: usize,
    pub positive: bool,
}

#[derive(Debug, Serialize)]
pub struct Diagram {
    pub n: usize,
    pub word: String,
    pub crossings: Vec<Crossing>,
    /// Final position of the strand starting at each position.
    pub permutation: Vec<usize>,
}

pub fn diagram(u: &BraidWord) -> Diagram {
    Diagram {
        n: u.strands(),
        word: u.to_string(),
        crossings: u
            .letters()
            .iter()
            .enumerate()
            .map(|(step, &l)| Crossing { step, position: l.unsigned_abs() as usize, positive: l > 0 })
            .collect(),
        permutation: permutation_of(u).images(),
    }
}

pub fn normal_form_value(n: usize, word: &str) -> Result<Value, String> {
    let u = BraidWord::parse(word, n).map_err(|e| e.to_string())?;
    let nf = NormalForm::of_word(&u);
    let canonical = nf.to_word();
    Ok(json!({
        "input": diagram(&u),
        "normal_form": {
            "delta_power": nf.delta_power(),
            "factors": nf.factors().iter().map(|f| f.to_word().to_string()).collect::<Vec<_>>(),
            "inf": nf.inf(),
            "sup": nf.sup(),
            "text": nf.to_string(),
        },
        "canonical": diagram(&canonical),
    }))
}

pub fn crossing_matrix_value(n: usize, word: &str) -> Result<Value, String> {
    let u = BraidWord::parse(word, n).map_err(|e| e.to_string())?;
    Ok(json!({ "n": n, "matrix": crossing_matrix(&u) }))
}

pub fn dcp_value(instance: &str, budget: usize) -> Result<Value, String> {
    let inst: DcpInstance = instance.parse().map_err(|e: braid_dcp::BraidError| e.to_string())?;
    let opts = SearchOptions { budget, threads: 1 };
    Ok(match solve_dcp(&inst, opts).map_err(|e| e.to_string())? {
        DcpOutcome::Yes(sol) => json!({
            "status": "YES",
            "a": sol.a,
            "b": sol.b,
            "diagnostics": sol.diagnostics,
            "check": diagram(&BraidWord::product(inst.n, [&sol.a, &inst.g, &sol.b]).map_err(|e| e.to_string())?),
        }),
        DcpOutcome::No(cert) => json!({ "status": "NO", "certificate": cert }),
        DcpOutcome::Inconclusive { budget } => json!({ "status": "INCONCLUSIVE", "budget": budget }),
    })
}

fn render(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

#[wasm_bindgen(js_name = normalForm)]
pub fn normal_form(n: usize, word: &str) -> String {
    render(normal_form_value(n, word))
}

#[wasm_bindgen(js_name = crossingMatrix)]
pub fn crossing_matrix_json(n: usize, word: &str) -> String {
    render(crossing_matrix_value(n, word))
}

#[wasm_bindgen(js_name = solveDcp)]
pub fn solve_dcp_json(instance: &str, budget: usize) -> String {
    render(dcp_value(instance, budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_of_delta() {
        let v = normal_form_value(3, "1 2 1").unwrap();
        assert_eq!(v["normal_form"]["delta_power"], 1);
        assert_eq!(v["normal_form"]["factors"].as_array().unwrap().len(), 0);
        assert_eq!(v["input"]["permutation"], json!([3, 2, 1]));
        assert_eq!(v["input"]["crossings"][1], json!({ "step": 1, "position": 2, "positive": true }));
    }

    #[test]
    fn matrix_is_symmetric() {
        let v = crossing_matrix_value(3, "1 2 -1").unwrap();
        let m: Vec<Vec<i64>> = serde_json::from_value(v["matrix"].clone()).unwrap();
        for (i, row) in m.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                assert_eq!(c, m[j][i]);
            }
        }
    }

    #[test]
    fn dcp_yes_and_no() {
        let yes = dcp_value("3\n1 2\n2 3\n1 2\n1 1 1 2 -2", 10_000).unwrap();
        assert_eq!(yes["status"], "YES");
        assert!(yes["diagnostics"]["k"].is_i64());
        let no = dcp_value("3\n1 2\n1 2\n\n2", 10_000).unwrap();
        assert_eq!(no["status"], "NO");
    }

    #[test]
    fn errors_become_json() {
        let out: Value = serde_json::from_str(&normal_form(3, "1 q")).unwrap();
        assert!(out["error"].as_str().unwrap().contains("q"));
        let out: Value = serde_json::from_str(&solve_dcp_json("nonsense", 10)).unwrap();
        assert!(out.get("error").is_some());
    }
}
