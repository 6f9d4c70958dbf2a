//! A small expression grammar for naming elements of `A_n` on a command
//! line, and its recursive-descent parser.
//!
//! ```text
//!   expr   := term ('+' term)*
//!   term   := factor ('*' factor)*
//!   factor := atom ('^' UINT)?
//!   atom   := '0' | '1'
//!           | 'y' UINT | 'x' UINT | 'xp' UINT      raw generators
//!           | 'c' UINT                              Chern class c_j
//!           | 'e' UINT | 'ep' UINT                  stable classes q_m, q_m'
//!           | 'b' UINT | 'd' UINT | 'dp' UINT       limit generators (n = 2)
//! ```
//!
//! Whitespace is ignored between tokens.  Everything the `Display`
//! implementation of [`Element`] prints parses back to the same element,
//! including `0` and `1`.
//!
//! Interpretation is relative to a generator count `n`:
//! `e m`/`ep m` require odd `m = 2j - 1` and expand to the symmetrised
//! exterior classes of degree `m` (the primed token uses the genuine
//! primed flavour `x + x'`), while `b2, b3, d3, d5, dp3, dp5` denote the
//! six generators of the inverse limit and are only meaningful when
//! `n = 2`.  Squaring is permitted on any factor; squares of exterior
//! atoms are simply zero.
//!
//! Every failure is reported as [`Error::Parse`] carrying the 0-based
//! byte offset of the offending token, so callers can point at the spot.

use crate::classes::{chern, quillen_e, Variant};
use crate::error::{Error, Result};
use crate::graded::Element;
use crate::quillen;

/// Parses `input` as an element of `A_n`.
pub fn parse_element(n: usize, input: &str) -> Result<Element> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, n };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    /// Consumes `op` if it is the next non-space byte.
    fn eat(&mut self, op: u8) -> bool {
        if self.peek() == Some(op) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc = acc + self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let exp = self.uint()?;
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(b @ b'0'..=b'9') = self.src.get(self.pos).copied() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u32))
                .ok_or_else(|| Error::Parse { pos: start, message: "number too large".into() })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<Element> {
        match self.peek() {
            None => Err(self.err("expected an expression")),
            Some(b'0'..=b'9') => {
                let start = self.pos;
                match self.uint()? {
                    0 => Ok(Element::zero(self.n)),
                    1 => Ok(Element::one(self.n)),
                    v => Err(Error::Parse {
                        pos: start,
                        message: format!("no constant {v}: the coefficient field has only 0 and 1"),
                    }),
                }
            }
            Some(b'a'..=b'z') => self.named_atom(),
            Some(b) => Err(self.err(format!("unexpected character '{}'", b as char))),
        }
    }

    fn named_atom(&mut self) -> Result<Element> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_lowercase()) {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let name = name.to_owned();
        let index = {
            self.skip_ws();
            if !self.src.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
                return Err(Error::Parse {
                    pos: start,
                    message: format!("generator '{name}' needs an index, like {name}1"),
                });
            }
            self.uint()?
        };
        let at = |message: String| Error::Parse { pos: start, message };
        let wrap = |r: Result<Element>| r.map_err(|e| at(e.to_string()));
        let n = self.n;
        match name.as_str() {
            "y" => wrap(Element::y(n, index as usize)),
            "x" => wrap(Element::x(n, index as usize)),
            "xp" => wrap(Element::xp(n, index as usize)),
            "c" => wrap(chern(n, index as usize)),
            "e" | "ep" => {
                if index % 2 == 0 {
                    return Err(at(format!(
                        "'{name}{index}' does not exist: these classes have odd degree"
                    )));
                }
                let k = (index as usize + 1) / 2;
                let variant = if name == "ep" { Variant::Primed } else { Variant::Plain };
                wrap(quillen_e(n, k, variant))
            }
            "b" | "d" | "dp" => {
                if n != 2 {
                    return Err(at(format!(
                        "'{name}{index}' lives in the two-generator algebra; it needs n = 2, not n = {n}"
                    )));
                }
                match (name.as_str(), index) {
                    ("b", 2) => Ok(quillen::b2()),
                    ("b", 3) => Ok(quillen::b3()),
                    ("d", 3) => Ok(quillen::d3()),
                    ("d", 5) => Ok(quillen::d5()),
                    ("dp", 3) => Ok(quillen::d3p()),
                    ("dp", 5) => Ok(quillen::d5p()),
                    _ => Err(at(format!(
                        "unknown generator '{name}{index}': the limit generators are b2, b3, d3, d5, dp3, dp5"
                    ))),
                }
            }
            _ => Err(at(format!(
                "unknown generator '{name}': expected one of y, x, xp, c, e, ep, b, d, dp"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::basis_in_degree;

    fn pos_of(r: Result<Element>) -> usize {
        match r {
            Err(Error::Parse { pos, .. }) => pos,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn raw_generators_and_constants() {
        assert_eq!(parse_element(2, "y1").unwrap(), Element::y(2, 1).unwrap());
        assert_eq!(parse_element(2, "xp2").unwrap(), Element::xp(2, 2).unwrap());
        assert_eq!(parse_element(2, "0").unwrap(), Element::zero(2));
        assert_eq!(parse_element(2, "1").unwrap(), Element::one(2));
        assert_eq!(parse_element(2, " y1 ^ 2 ").unwrap(), Element::y(2, 1).unwrap().pow(2));
    }

    #[test]
    fn sums_products_and_powers_evaluate() {
        let d5 = parse_element(2, "y1^2*x2 + y2^2*x1").unwrap();
        assert_eq!(d5, quillen::d5());
        // Characteristic two: equal terms cancel, exterior squares vanish.
        assert!(parse_element(2, "y1 + y1").unwrap().is_zero());
        assert!(parse_element(2, "x1^2").unwrap().is_zero());
        assert_eq!(parse_element(2, "y1^0").unwrap(), Element::one(2));
    }

    #[test]
    fn stable_class_tokens_expand() {
        assert_eq!(parse_element(3, "c2").unwrap(), chern(3, 2).unwrap());
        assert_eq!(parse_element(3, "e3").unwrap(), quillen_e(3, 2, Variant::Plain).unwrap());
        assert_eq!(parse_element(3, "ep5").unwrap(), quillen_e(3, 3, Variant::Primed).unwrap());
        let lhs = parse_element(3, "c1*e3 + c2*e1").unwrap();
        let rhs = chern(3, 1).unwrap() * quillen_e(3, 2, Variant::Plain).unwrap()
            + chern(3, 2).unwrap() * quillen_e(3, 1, Variant::Plain).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn limit_generator_tokens_expand() {
        assert_eq!(parse_element(2, "b2").unwrap(), quillen::b2());
        assert_eq!(parse_element(2, "dp5").unwrap(), quillen::d5p());
        let top = parse_element(2, "d3*dp3*d5*dp5").unwrap();
        assert_eq!(top, quillen::d3() * quillen::d3p() * quillen::d5() * quillen::d5p());
        assert!(!top.is_zero());
    }

    #[test]
    fn display_round_trips() {
        // Every monomial of several bases, plus assorted composite elements.
        for n in 1..=3 {
            for d in 0..=8 {
                for m in basis_in_degree(n, d).unwrap().monomials() {
                    let e = Element::from_monomial(m.clone());
                    assert_eq!(parse_element(n, &e.to_string()).unwrap(), e);
                }
            }
        }
        for expr in ["0", "b2*d3 + dp5 + b3", "c1^4*e3*ep1 + c2^2", "y1*y2 + x1*xp1"] {
            let e = parse_element(2, expr).unwrap();
            assert_eq!(parse_element(2, &e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn errors_carry_byte_positions() {
        assert_eq!(pos_of(parse_element(2, "")), 0);
        assert_eq!(pos_of(parse_element(2, "y1 + ")), 5);
        assert_eq!(pos_of(parse_element(2, "y1 ++ y2")), 4);
        assert_eq!(pos_of(parse_element(2, "q3")), 0);
        assert_eq!(pos_of(parse_element(2, "y1 * q3")), 5);
        assert_eq!(pos_of(parse_element(2, "y1^")), 3);
        assert_eq!(pos_of(parse_element(2, "2*y1")), 0);
        assert_eq!(pos_of(parse_element(2, "y1 y2")), 3);
        assert_eq!(pos_of(parse_element(2, "y")), 0);
    }

    #[test]
    fn semantic_errors_point_at_the_token() {
        // Out-of-range index, even stable-class degree, limit generators
        // outside n = 2: all reported at the token start.
        assert_eq!(pos_of(parse_element(2, "y3")), 0);
        assert_eq!(pos_of(parse_element(2, "y0")), 0);
        assert_eq!(pos_of(parse_element(2, "c1 + e2")), 5);
        assert_eq!(pos_of(parse_element(3, "b2")), 0);
        assert_eq!(pos_of(parse_element(2, "b4")), 0);
        assert_eq!(pos_of(parse_element(2, "c3")), 0);
    }
}
