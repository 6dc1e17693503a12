//! Text and JSON renderings of results.
//!
//! Both list terms highest degree first, the same order `Display` uses. The
//! JSON shape is documented in `docs/output-format.md`.

use malcev_core::{AElement, AMonomial, UElement};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Serialize, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: String,
    pub exp: [u32; 5],
    #[serde(rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<u8>,
}

pub fn u_terms(x: &UElement) -> Vec<Term> {
    x.iter()
        .rev()
        .map(|(m, c)| Term {
            coeff: c.to_string(),
            exp: m.exps(),
            kind: None,
        })
        .collect()
}

pub fn a_terms(x: &AElement) -> Vec<Term> {
    x.iter()
        .rev()
        .map(|(m, c): (&AMonomial, _)| Term {
            coeff: c.to_string(),
            exp: m.to_pbw().exps(),
            kind: Some(m.type_tag()),
        })
        .collect()
}

fn json(terms: &[Term]) -> String {
    serde_json::to_string(terms).expect("terms always serialize")
}

pub fn render_u(x: &UElement, format: Format) -> String {
    match format {
        Format::Text => x.to_string(),
        Format::Json => json(&u_terms(x)),
    }
}

pub fn render_a(x: &AElement, format: Format) -> String {
    match format {
        Format::Text => x.to_string(),
        Format::Json => json(&a_terms(x)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use malcev_core::alternative::project;

    #[test]
    fn json_for_u() {
        let x = parse("-1/6 ce + 2").unwrap();
        assert_eq!(
            render_u(&x, Format::Json),
            r#"[{"coeff":"-1/6","exp":[0,0,1,0,1]},{"coeff":"2","exp":[0,0,0,0,0]}]"#
        );
        assert_eq!(render_u(&UElement::zero(), Format::Json), "[]");
    }

    #[test]
    fn json_for_a_carries_the_type() {
        let x = project(&parse("cd - e").unwrap());
        assert_eq!(
            render_a(&x, Format::Json),
            r#"[{"coeff":"1","exp":[0,0,1,1,0],"type":2},{"coeff":"-1","exp":[0,0,0,0,1],"type":1}]"#
        );
    }

    #[test]
    fn text_is_display() {
        let x = parse("ab - c").unwrap();
        assert_eq!(render_u(&x, Format::Text), "ab - c");
    }
}
