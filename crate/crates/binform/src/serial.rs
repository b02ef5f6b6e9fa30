//! Canonical text serialization of polynomials, forms and covariants.

use binform_core::covariants::Covariant;
use binform_core::forms::{Form, Pair};
use binform_core::ring::{parse_poly, Poly};

pub fn encode_poly(p: &Poly) -> String {
    p.to_string()
}

pub fn decode_poly(s: &str) -> Option<Poly> {
    parse_poly(s.trim()).ok()
}

/// `order q` on the first line, the body on the second.
pub fn encode_form(f: &Form) -> String {
    format!("order {}\n{}", f.order(), f.body())
}

pub fn decode_form(s: &str) -> Option<Form> {
    let (head, body) = s.split_once('\n')?;
    let q: u32 = head.strip_prefix("order ")?.trim().parse().ok()?;
    Form::from_poly(&decode_poly(body)?, q, Pair::X).ok()
}

/// `ground d degree m`, then the form.
pub fn encode_covariant(c: &Covariant) -> String {
    format!("ground {} degree {}\n{}", c.d(), c.degree(), encode_form(c.form()))
}

pub fn decode_covariant(s: &str) -> Option<Covariant> {
    let (head, rest) = s.split_once('\n')?;
    let mut words = head.split_whitespace();
    let (Some("ground"), Some(d), Some("degree"), Some(m), None) = (words.next(), words.next(), words.next(), words.next(), words.next())
    else {
        return None;
    };
    let form = decode_form(rest)?;
    Some(Covariant::with_degree(form, d.parse().ok()?, m.parse().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use binform_core::covariants::QuinticCatalog;
    use binform_core::covariants::ThetaName;

    #[test]
    fn covariants_round_trip() {
        let cat = QuinticCatalog::new();
        for t in [ThetaName::T22, ThetaName::T40, ThetaName::T82] {
            let c = cat.theta(t);
            assert_eq!(decode_covariant(&encode_covariant(c)).as_ref(), Some(c));
        }
        assert_eq!(decode_covariant("ground 5\nx1"), None);
    }

    #[test]
    fn rational_coefficients_round_trip() {
        let p = parse_poly("-7/10*q0^2*alpha + 3*x1 - 1/3").unwrap();
        assert_eq!(decode_poly(&encode_poly(&p)), Some(p));
    }
}
