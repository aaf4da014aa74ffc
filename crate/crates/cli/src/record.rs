//! Output records and their JSON-lines / CSV / text rendering.

use serde::Serialize;
use sylvester_cubic::sylvester::Decomposition;

use crate::commands::SolvedCubic;
use crate::literal::render_complex;

/// One solved (or failed) cubic, with every complex value rendered as a
/// canonical literal. Field order is the wire order of the jsonl schema.
#[derive(Debug, Clone, Serialize)]
pub struct SolveRecord {
    pub line: usize,
    pub input: [String; 4],
    pub classification: Option<String>,
    pub p: Option<String>,
    pub q: Option<String>,
    pub shift: Option<String>,
    pub roots: Option<[String; 3]>,
    pub residuals: Option<[f64; 3]>,
    pub decomposition: Option<DecompositionRecord>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionRecord {
    pub r: String,
    pub s: String,
    pub alpha: String,
    pub beta: String,
}

impl From<&Decomposition> for DecompositionRecord {
    fn from(d: &Decomposition) -> Self {
        DecompositionRecord {
            r: render_complex(d.r),
            s: render_complex(d.s),
            alpha: render_complex(d.alpha),
            beta: render_complex(d.beta),
        }
    }
}

impl SolveRecord {
    pub fn success(line: usize, input: [String; 4], solved: &SolvedCubic) -> Self {
        SolveRecord {
            line,
            input,
            classification: Some(solved.classification.name().to_owned()),
            p: Some(render_complex(solved.p)),
            q: Some(render_complex(solved.q)),
            shift: Some(render_complex(solved.shift)),
            roots: Some(solved.roots.map(render_complex)),
            residuals: Some(solved.residuals),
            decomposition: solved.decomposition.as_ref().map(DecompositionRecord::from),
            error: None,
        }
    }

    pub fn failure(line: usize, input: [String; 4], message: String) -> Self {
        SolveRecord {
            line,
            input,
            classification: None,
            p: None,
            q: None,
            shift: None,
            roots: None,
            residuals: None,
            decomposition: None,
            error: Some(message),
        }
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }

    pub const CSV_HEADER: &'static str = "line,a,b,c,d,classification,p,q,shift,root1,root2,root3,residual1,residual2,residual3,r,s,alpha,beta,error";

    pub fn to_csv_row(&self) -> String {
        let blank = String::new();
        let three_blanks = || [blank.clone(), blank.clone(), blank.clone()];
        let roots = self.roots.clone().unwrap_or_else(three_blanks);
        let residuals = self
            .residuals
            .map(|r| r.map(crate::commands::render_residual))
            .unwrap_or_else(three_blanks);
        let decomposition = self.decomposition.clone();
        let (r, s, alpha, beta) = match decomposition {
            Some(d) => (d.r, d.s, d.alpha, d.beta),
            None => (blank.clone(), blank.clone(), blank.clone(), blank.clone()),
        };
        let fields = [
            self.line.to_string(),
            self.input[0].clone(),
            self.input[1].clone(),
            self.input[2].clone(),
            self.input[3].clone(),
            self.classification.clone().unwrap_or_default(),
            self.p.clone().unwrap_or_default(),
            self.q.clone().unwrap_or_default(),
            self.shift.clone().unwrap_or_default(),
            roots[0].clone(),
            roots[1].clone(),
            roots[2].clone(),
            residuals[0].clone(),
            residuals[1].clone(),
            residuals[2].clone(),
            r,
            s,
            alpha,
            beta,
            self.error.clone().unwrap_or_default(),
        ];
        fields
            .iter()
            .map(|f| csv_escape(f))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Quotes a CSV field only when it contains a delimiter, quote, or newline.
fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_owned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_escape_quotes_only_when_needed() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn failure_record_nulls_every_data_field() {
        let record = SolveRecord::failure(
            3,
            ["0".into(), "1".into(), "1".into(), "1".into()],
            "leading coefficient is zero".into(),
        );
        let json = record.to_jsonl();
        assert!(json.contains("\"classification\":null"));
        assert!(json.contains("\"roots\":null"));
        assert!(json.contains("\"error\":\"leading coefficient is zero\""));
        let row = record.to_csv_row();
        assert_eq!(row, "3,0,1,1,1,,,,,,,,,,,,,,,leading coefficient is zero");
    }
}
