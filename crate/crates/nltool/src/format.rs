//! Text and JSON rendering of integer multilinear polynomials, monomials in
//! descending degree then descending mask, variables ascending within a
//! monomial: `4*a0*a1*a2 - 2*a1*a2 - 2*a0 + 3`.

use nlcore::IntegerMultilinearPoly;
use serde::Serialize;

pub fn format_poly(p: &IntegerMultilinearPoly) -> String {
    let terms = sorted_terms(p);
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, &(mask, coeff)) in terms.iter().enumerate() {
        let magnitude = coeff.unsigned_abs();
        if i == 0 {
            if coeff < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if coeff < 0 { " - " } else { " + " });
        }
        let vars: Vec<String> = (0..64)
            .filter(|j| (mask >> j) & 1 == 1)
            .map(|j| format!("a{j}"))
            .collect();
        if vars.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if magnitude != 1 {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

#[derive(Serialize)]
pub struct PolyTermJson {
    pub coeff: i64,
    pub vars: Vec<u32>,
}

#[derive(Serialize)]
pub struct PolyJson {
    pub n: usize,
    pub text: String,
    pub terms: Vec<PolyTermJson>,
}

/// JSON form of a nonlinearity polynomial over `a_0..a_n`; term order is
/// the same as the text form, so serialization is canonical.
pub fn poly_json(n: usize, p: &IntegerMultilinearPoly) -> PolyJson {
    let terms = sorted_terms(p)
        .into_iter()
        .map(|(mask, coeff)| PolyTermJson {
            coeff,
            vars: (0..64).filter(|j| (mask >> j) & 1 == 1).collect(),
        })
        .collect();
    PolyJson {
        n,
        text: format_poly(p),
        terms,
    }
}

fn sorted_terms(p: &IntegerMultilinearPoly) -> Vec<(u64, i64)> {
    let mut terms: Vec<(u64, i64)> = p.terms().collect();
    terms.sort_by_key(|&(mask, _)| std::cmp::Reverse((mask.count_ones(), mask)));
    terms
}

#[cfg(test)]
mod tests {
    use super::*;
    use nlcore::build_nl_poly;

    #[test]
    fn golden_polynomial_text() {
        let f = crate::spec::parse_anf("x1*x2 + 1", 2).unwrap();
        let p = build_nl_poly(&f);
        assert_eq!(format_poly(p.poly()), "4*a0*a1*a2 - 2*a1*a2 - 2*a0 + 3");
    }

    #[test]
    fn zero_and_unit_coefficients() {
        assert_eq!(
            format_poly(&IntegerMultilinearPoly::new(2, vec![0, 0, 0, 0])),
            "0"
        );
        // equal degrees order by descending mask
        assert_eq!(
            format_poly(&IntegerMultilinearPoly::new(2, vec![-5, 1, -1, 0])),
            "-a1 + a0 - 5"
        );
    }
}
