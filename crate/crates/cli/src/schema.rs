//! JSON shapes shared by every subcommand.
//!
//! Rationals travel as decimal strings, either a bare integer or
//! `"num/den"`, never as floats. Element coefficients are spelled out as
//! `{start, order, num, den}` records so files round-trip exactly.

use idempair_core::classify::{SpectrumFinding, Verdict, VerdictKind};
use idempair_core::drazin::{DrazinChecks, DrazinResult};
use idempair_core::element::{Element, WordCombination};
use idempair_core::matrix::RationalMatrix;
use idempair_core::pres::{FamilyKind, OddZero, Presentation};
use idempair_core::word::{Gen, Word};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::str::FromStr;

pub fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))
}

pub fn parse_rationals(ss: &[String]) -> Result<Vec<BigRational>, String> {
    ss.iter().map(|s| parse_rational(s)).collect()
}

/// One basis-word coefficient, exact and self-describing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub start: String,
    pub order: usize,
    pub num: String,
    pub den: String,
}

impl CoeffEntry {
    pub fn new(w: &Word, c: &BigRational) -> CoeffEntry {
        CoeffEntry {
            start: match w.start() {
                Gen::P => "P".into(),
                Gen::Q => "Q".into(),
            },
            order: w.order(),
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        }
    }

    pub fn word(&self) -> Result<Word, String> {
        if self.order == 0 {
            return Err("coefficient entries need order >= 1".into());
        }
        match self.start.as_str() {
            "P" | "p" => Ok(Word::p_word(self.order)),
            "Q" | "q" => Ok(Word::q_word(self.order)),
            other => Err(format!("bad start {other:?}: expected P or Q")),
        }
    }

    pub fn value(&self) -> Result<BigRational, String> {
        parse_rational(&format!("{}/{}", self.num, self.den))
    }
}

/// Element or profile input, matching the output of `classify`/`drazin`.
#[derive(Debug, Clone, Deserialize)]
pub struct ElementInput {
    pub family: String,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub flag: Option<String>,
    #[serde(default)]
    pub with_unit: Option<bool>,
    #[serde(default)]
    pub coeffs: Vec<CoeffEntry>,
}

/// Which algebra a command is aimed at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraChoice {
    Chain { n: usize, flag: OddZero },
    Family { kind: FamilyKind, m: usize },
}

pub fn parse_flag(s: &str) -> Result<OddZero, String> {
    match s {
        "qp-zero" | "qp_zero" => Ok(OddZero::QpZero),
        "pq-zero" | "pq_zero" => Ok(OddZero::PqZero),
        other => Err(format!("bad flag {other:?}: expected qp-zero or pq-zero")),
    }
}

pub fn flag_str(flag: OddZero) -> &'static str {
    match flag {
        OddZero::QpZero => "qp_zero",
        OddZero::PqZero => "pq_zero",
    }
}

pub fn parse_choice(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    flag: OddZero,
) -> Result<AlgebraChoice, String> {
    let kind = match family {
        "Zn" | "zn" | "ZN" => {
            let n = n.ok_or("family Zn needs --n")?;
            return Ok(AlgebraChoice::Chain { n, flag });
        }
        "F1" | "f1" => FamilyKind::F1,
        "F2" | "f2" => FamilyKind::F2,
        "F3" | "f3" => FamilyKind::F3,
        "F4" | "f4" => FamilyKind::F4,
        other => {
            return Err(format!(
                "bad family {other:?}: expected Zn, F1, F2, F3 or F4"
            ))
        }
    };
    let m = m.ok_or("presentation families need --m")?;
    Ok(AlgebraChoice::Family { kind, m })
}

impl AlgebraChoice {
    pub fn presentation(&self) -> idempair_core::Result<Presentation> {
        match *self {
            AlgebraChoice::Chain { n, flag } => Presentation::zn(n, flag),
            AlgebraChoice::Family { kind, m } => Presentation::family(kind, m),
        }
    }

    pub fn json(&self) -> Value {
        match *self {
            AlgebraChoice::Chain { n, flag } => {
                json!({"family": "Zn", "n": n, "flag": flag_str(flag)})
            }
            AlgebraChoice::Family { kind, m } => json!({"family": kind.name(), "m": m}),
        }
    }
}

pub fn choice_of_input(input: &ElementInput) -> Result<AlgebraChoice, String> {
    let flag = match input.flag.as_deref() {
        Some(s) => parse_flag(s)?,
        None => OddZero::QpZero,
    };
    parse_choice(&input.family, input.n, input.m, flag)
}

/// Splits coefficient entries into order-indexed `x`/`y` vectors.
pub fn profile_vectors(
    coeffs: &[CoeffEntry],
) -> Result<(Vec<BigRational>, Vec<BigRational>), String> {
    use num_traits::Zero;
    let mut xs: Vec<BigRational> = Vec::new();
    let mut ys: Vec<BigRational> = Vec::new();
    for entry in coeffs {
        let w = entry.word()?;
        let v = entry.value()?;
        let side = match w.start() {
            Gen::P => &mut xs,
            Gen::Q => &mut ys,
        };
        if side.len() < w.order() {
            side.resize(w.order(), BigRational::zero());
        }
        side[w.order() - 1] += v;
    }
    Ok((xs, ys))
}

pub fn presentation_json(pres: &Presentation) -> Value {
    match pres.family_parts() {
        Some((kind, m)) => json!({"family": kind.name(), "m": m}),
        None => match *pres {
            Presentation::Zn { n, flag } => {
                json!({"family": "Zn", "n": n, "flag": flag_str(flag)})
            }
            _ => unreachable!("presentations are chains or families"),
        },
    }
}

pub fn element_coeffs_json(elem: &Element) -> Value {
    let entries: Vec<CoeffEntry> = elem
        .terms()
        .map(|(w, c)| CoeffEntry::new(w, c))
        .collect();
    serde_json::to_value(entries).expect("serializable")
}

pub fn combination_coeffs_json(comb: &WordCombination) -> Value {
    let entries: Vec<CoeffEntry> = comb
        .terms()
        .map(|(w, c)| CoeffEntry::new(w, c))
        .collect();
    serde_json::to_value(entries).expect("serializable")
}

pub fn matrix_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rational_str(m.get(i, j))).collect())
        .collect();
    json!(rows)
}

pub fn kind_name(kind: &VerdictKind) -> &'static str {
    match kind {
        VerdictKind::Zero => "Zero",
        VerdictKind::Invertible => "Invertible",
        VerdictKind::ProperlyGroupInvertible => "ProperlyGroupInvertible",
        VerdictKind::DrazinOnly(_) => "DrazinOnly",
        VerdictKind::Nilpotent(_) => "Nilpotent",
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    json!({
        "kind": kind_name(&v.kind),
        "index": v.index(),
        "spectrum": v.spectrum.iter().map(rational_str).collect::<Vec<_>>(),
        "rule_fired": v.rule_fired,
        "decided_by_theorem": v.decided_by_theorem,
        "group_invertible": v.group_invertible(),
        "properly_group_invertible": v.properly_group_invertible(),
    })
}

pub fn checks_json(c: &DrazinChecks) -> Value {
    json!({
        "commutes": c.commutes,
        "inner": c.inner,
        "power": c.power,
        "minimal": c.minimal,
        "all": c.all(),
    })
}

pub fn drazin_element_json(r: &DrazinResult<Element>) -> Value {
    json!({
        "inverse": element_coeffs_json(&r.inverse),
        "index": r.index,
        "checks": checks_json(&r.checks),
    })
}

pub fn drazin_matrix_json(r: &DrazinResult<RationalMatrix>) -> Value {
    json!({
        "inverse": matrix_json(&r.inverse),
        "index": r.index,
        "checks": checks_json(&r.checks),
    })
}

pub fn spectrum_json(s: &SpectrumFinding) -> Value {
    json!({
        "values": s.values.iter().map(rational_str).collect::<Vec<_>>(),
        "complete": s.complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use idempair_core::element::{int, rat};

    #[test]
    fn rationals_render_and_parse() {
        assert_eq!(rational_str(&rat(-1, 2)), "-1/2");
        assert_eq!(rational_str(&int(5)), "5");
        assert_eq!(parse_rational("-7/3").unwrap(), rat(-7, 3));
        assert_eq!(parse_rational("4").unwrap(), int(4));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn element_input_round_trips() {
        let text = r#"{"family":"F1","m":2,"coeffs":[{"start":"P","order":3,"num":"-1","den":"2"}]}"#;
        let input: ElementInput = serde_json::from_str(text).unwrap();
        let choice = choice_of_input(&input).unwrap();
        assert_eq!(
            choice,
            AlgebraChoice::Family {
                kind: FamilyKind::F1,
                m: 2
            }
        );
        let (xs, ys) = profile_vectors(&input.coeffs).unwrap();
        assert_eq!(xs, vec![int(0), int(0), rat(-1, 2)]);
        assert!(ys.is_empty());
    }

    #[test]
    fn chain_input_defaults_flag() {
        let text = r#"{"family":"Zn","n":3}"#;
        let input: ElementInput = serde_json::from_str(text).unwrap();
        assert_eq!(
            choice_of_input(&input).unwrap(),
            AlgebraChoice::Chain {
                n: 3,
                flag: OddZero::QpZero
            }
        );
    }
}
