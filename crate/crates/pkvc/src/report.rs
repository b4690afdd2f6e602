//! Per-instance ratio records and the JSON shapes emitted by the CLI.

use std::io::Write;

use pkvc_core::bounds::{self, Rational};
use pkvc_core::coloring::Coloring;
use pkvc_core::{CoverSolution, Graph, Verdict};
use serde::Serialize;

pub const CSV_COLUMNS: [&str; 11] = [
    "instance",
    "n",
    "d",
    "k",
    "algo",
    "size",
    "lb",
    "opt",
    "ratio_opt",
    "ratio_lb",
    "ms",
];

/// One algorithm run on one instance. Ratios are kept exact; the float
/// fields exist for output only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioReport {
    pub instance: String,
    pub n: usize,
    /// Absent for irregular inputs.
    pub d: Option<usize>,
    pub k: usize,
    pub algo: String,
    pub size: usize,
    /// Ceiling of the degree lower bound, where it applies.
    pub lb: Option<i64>,
    pub opt: Option<usize>,
    pub ratio_opt: Option<f64>,
    pub ratio_lb: Option<f64>,
    pub ms: Option<f64>,
    #[serde(skip)]
    pub exact_ratio_opt: Option<Rational>,
    #[serde(skip)]
    pub exact_ratio_lb: Option<Rational>,
}

fn quotient(size: usize, den: i64) -> Rational {
    if den == 0 {
        // Both zero only on edgeless inputs.
        return Rational::from_integer(if size == 0 { 1 } else { i64::MAX });
    }
    Rational::new(size as i64, den)
}

impl RatioReport {
    pub fn new(
        instance: impl Into<String>,
        g: &Graph,
        sol: &CoverSolution,
        opt: Option<usize>,
        ms: Option<f64>,
    ) -> Self {
        let d = g.regularity();
        let lb = d
            .and_then(|d| bounds::lb_regular(g.n(), d, sol.k).ok())
            .map(bounds::ceil);
        let exact_ratio_opt = opt.map(|o| quotient(sol.size(), o as i64));
        let exact_ratio_lb = lb.map(|l| quotient(sol.size(), l));
        Self {
            instance: instance.into(),
            n: g.n(),
            d,
            k: sol.k,
            algo: sol.algorithm.name().to_string(),
            size: sol.size(),
            lb,
            opt,
            ratio_opt: exact_ratio_opt.map(bounds::to_f64),
            ratio_lb: exact_ratio_lb.map(bounds::to_f64),
            ms,
            exact_ratio_opt,
            exact_ratio_lb,
        }
    }

    /// `ratio_opt >= 1`, `ratio_lb >= ratio_opt` and `size >= lb`.
    pub fn check(&self) -> Result<(), String> {
        let one = Rational::from_integer(1);
        if let Some(r) = self.exact_ratio_opt {
            if r < one {
                return Err(format!("{}: cover smaller than the optimum", self.instance));
            }
        }
        if let (Some(rl), Some(ro)) = (self.exact_ratio_lb, self.exact_ratio_opt) {
            if rl < ro {
                return Err(format!(
                    "{}: lower bound exceeds the optimum",
                    self.instance
                ));
            }
        }
        if let Some(lb) = self.lb {
            if (self.size as i64) < lb {
                return Err(format!("{}: cover below the lower bound", self.instance));
            }
        }
        Ok(())
    }

    fn csv_record(&self) -> [String; 11] {
        let opt_str = |x: Option<String>| x.unwrap_or_default();
        [
            self.instance.clone(),
            self.n.to_string(),
            opt_str(self.d.map(|d| d.to_string())),
            self.k.to_string(),
            self.algo.clone(),
            self.size.to_string(),
            opt_str(self.lb.map(|x| x.to_string())),
            opt_str(self.opt.map(|x| x.to_string())),
            opt_str(self.ratio_opt.map(|x| format!("{x:.6}"))),
            opt_str(self.ratio_lb.map(|x| format!("{x:.6}"))),
            opt_str(self.ms.map(|x| format!("{x:.3}"))),
        ]
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[RatioReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in rows {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(out: W, rows: &[RatioReport]) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(out, rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub feasible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Feasible => Self {
                feasible: true,
                witness: None,
            },
            Verdict::Witness(p) => Self {
                feasible: false,
                witness: Some(p.clone()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringJson {
    pub p: usize,
    pub colors: Vec<usize>,
    pub max_defect: usize,
}

impl From<&Coloring> for ColoringJson {
    fn from(c: &Coloring) -> Self {
        Self {
            p: c.p(),
            colors: c.colors().collect(),
            max_defect: c.max_defect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateJson {
    pub name: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverJson {
    pub algorithm: String,
    pub k: usize,
    pub cover: Vec<usize>,
    pub size: usize,
    pub feasible: bool,
    pub candidates: Vec<CandidateJson>,
}

impl CoverJson {
    pub fn new(sol: &CoverSolution, verdict: &Verdict) -> Self {
        Self {
            algorithm: sol.algorithm.name().to_string(),
            k: sol.k,
            cover: sol.cover.clone(),
            size: sol.size(),
            feasible: verdict.is_feasible(),
            candidates: sol
                .candidates
                .iter()
                .map(|c| CandidateJson {
                    name: c.name.clone(),
                    size: c.size,
                })
                .collect(),
        }
    }
}

/// `solve --json` output: the cover fields plus its ratio record.
#[derive(Clone, Debug, Serialize)]
pub struct SolveJson {
    #[serde(flatten)]
    pub solution: CoverJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    pub report: RatioReport,
}

#[cfg(test)]
mod tests {
    use super::*;
    use pkvc_core::approx::dc;
    use pkvc_core::generators::{generate, Family, GeneratorSpec};

    #[test]
    fn k4_row() {
        let k4 = generate(&GeneratorSpec::new(Family::Complete, 4)).unwrap();
        let sol = dc(&k4, 3).unwrap();
        let row = RatioReport::new("k4", &k4, &sol, Some(2), None);
        assert_eq!(row.lb, Some(2));
        assert_eq!(row.exact_ratio_opt, Some(Rational::from_integer(1)));
        row.check().unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &[row]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "instance,n,d,k,algo,size,lb,opt,ratio_opt,ratio_lb,ms\nk4,4,3,3,dc,2,2,2,1.000000,1.000000,\n"
        );
    }

    #[test]
    fn verdict_shapes() {
        let ok = serde_json::to_string(&VerdictJson::from(&Verdict::Feasible)).unwrap();
        assert_eq!(ok, r#"{"feasible":true}"#);
        let bad =
            serde_json::to_string(&VerdictJson::from(&Verdict::Witness(vec![0, 1, 2]))).unwrap();
        assert_eq!(bad, r#"{"feasible":false,"witness":[0,1,2]}"#);
    }
}
