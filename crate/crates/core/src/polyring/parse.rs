//! Recursive-descent parser for the polynomial grammar
//!
//! ```text
//! expr        := ['-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := coefficient | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! coefficient := integer ('/' positive-integer)?
//! ```
//!
//! Multiplication is always explicit.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Monomial, PolyError, Polynomial, Rational, VarSet};

/// Parses `source` into a polynomial over the given variables.
pub fn parse_polynomial(source: &str, vars: &VarSet) -> Result<Polynomial, PolyError> {
    let mut parser = Parser {
        src: source.as_bytes(),
        pos: 0,
        vars,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.unexpected());
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> PolyError {
        match self.src.get(self.pos) {
            None => PolyError::Syntax {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            },
            Some(b'/') => PolyError::Division { pos: self.pos },
            Some(&c) => PolyError::Syntax {
                pos: self.pos,
                msg: format!("unexpected character `{}`", c as char),
            },
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.coefficient(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                let index = self
                    .vars
                    .index_of(name)
                    .ok_or_else(|| PolyError::UnknownVariable {
                        name: name.to_string(),
                        pos: start,
                    })?;
                let e = self.exponent()?;
                let mut m = Monomial::one(self.vars.len());
                m.exps_mut()[index] = e;
                Ok(Polynomial::term(self.vars, m, Rational::from_integer(1.into())))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(match self.src.get(self.pos) {
                        None => PolyError::Syntax {
                            pos: self.pos,
                            msg: "missing `)`".into(),
                        },
                        _ => self.unexpected(),
                    });
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            _ => Err(self.unexpected()),
        }
    }

    /// Optional `^ nat` suffix; returns 1 when absent.
    fn exponent(&mut self) -> Result<u32, PolyError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        let digits = self.digits();
        if digits.is_empty() {
            return Err(PolyError::NonIntegerExponent { pos: at });
        }
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(PolyError::NonIntegerExponent { pos: at });
        }
        digits
            .parse::<u32>()
            .map_err(|_| PolyError::NonIntegerExponent { pos: at })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn coefficient(&mut self) -> Result<Polynomial, PolyError> {
        let num: BigInt = self.digits().parse().expect("digit run");
        let mut value = Rational::from_integer(num);
        if self.peek() == Some(b'/') {
            let slash = self.pos;
            self.pos += 1;
            self.skip_ws();
            let den = self.digits();
            if den.is_empty() {
                return Err(PolyError::Division { pos: slash });
            }
            let den: BigInt = den.parse().expect("digit run");
            if den.is_zero() {
                return Err(PolyError::Syntax {
                    pos: slash + 1,
                    msg: "denominator must be positive".into(),
                });
            }
            value /= Rational::from_integer(den);
        }
        Ok(Polynomial::constant(self.vars, value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> VarSet {
        VarSet::xyz()
    }

    #[test]
    fn parses_conic() {
        let g = parse_polynomial("x^2 - 6*x*y + y^2 - 2*x*z + 6*y*z", &xyz()).unwrap();
        assert_eq!(g.num_terms(), 5);
        assert_eq!(g.to_string(), "x^2 - 6*x*y + y^2 - 2*x*z + 6*y*z");
    }

    #[test]
    fn zero_and_distributivity() {
        assert!(parse_polynomial("0", &xyz()).unwrap().is_zero());
        let a = parse_polynomial("x*(y + z)", &xyz()).unwrap();
        let b = parse_polynomial("x*y + x*z", &xyz()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_coefficients_and_unary_minus() {
        let a = parse_polynomial("-3/2*x + (-y)", &xyz()).unwrap();
        assert_eq!(a.to_string(), "-3/2*x - y");
        let b = parse_polynomial("(x - y)^2", &xyz()).unwrap();
        assert_eq!(b.to_string(), "x^2 - 2*x*y + y^2");
    }

    #[test]
    fn error_cases() {
        let v = xyz();
        assert!(matches!(
            parse_polynomial("x + w", &v),
            Err(PolyError::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(
            parse_polynomial("x^1.5", &v),
            Err(PolyError::NonIntegerExponent { pos: 2 })
        ));
        assert!(matches!(
            parse_polynomial("x^-1", &v),
            Err(PolyError::NonIntegerExponent { .. })
        ));
        assert!(matches!(
            parse_polynomial("x/2", &v),
            Err(PolyError::Division { pos: 1 })
        ));
        assert!(matches!(
            parse_polynomial("2x", &v),
            Err(PolyError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_polynomial("x*-y", &v),
            Err(PolyError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_polynomial("(x + y", &v),
            Err(PolyError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0", &v),
            Err(PolyError::Syntax { .. })
        ));
        assert!(parse_polynomial("", &v).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -20i64..20, 1i64..6), 0..8).prop_map(
            |ts| {
                let vars = VarSet::xyz();
                Polynomial::from_terms(
                    &vars,
                    ts.into_iter().map(|((a, b, c), n, d)| {
                        (
                            Monomial::new(&[a, b, c]),
                            Rational::new(n.into(), d.into()),
                        )
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(f in arb_poly()) {
            let printed = f.to_string();
            let back = parse_polynomial(&printed, &VarSet::xyz()).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(back.to_string(), printed);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn homogeneous_degrees_add(a in arb_poly(), b in arb_poly()) {
            let w = crate::polyring::WeightVector::new(vec![0, 0, 1]);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(
                prod.initial_form(&w).unwrap(),
                &a.initial_form(&w).unwrap() * &b.initial_form(&w).unwrap()
            );
            let a1 = a.coefficient_of_last_power(0);
            if let (Ok(da), Ok(db)) = (a.form_degree(), b.form_degree()) {
                prop_assert_eq!(prod.form_degree().unwrap(), da + db);
            }
            // dehomogenize ∘ homogenize = id on affine inputs (z-free parts)
            if let Some(aff) = a1.restrict(&VarSet::xy()) {
                prop_assert_eq!(aff.homogenize().unwrap().dehomogenize().unwrap(), aff);
            }
        }
    }
}
