//! Parser for sums of rational multiples of products of `c<k>` / `T<k>`.

use num_traits::One;

use crate::arith::{int, Rat};

use super::{to_chern_basis, Basis, InvariantError, InvariantPoly};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> InvariantError {
        InvariantError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn number(&mut self) -> Result<u64, InvariantError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| InvariantError::Syntax { pos: start, msg: "number too large".into() })
    }
}

#[derive(Default)]
struct Seen {
    chern: bool,
    power: bool,
}

/// Parses an invariant polynomial with generators numbered `1..=maxgen`.
///
/// Input using only `c<k>` stays in the Chern basis, input using only `T<k>`
/// in the power-sum basis; mixed input is converted to the Chern basis.
pub fn parse_phi(src: &str, maxgen: u32) -> Result<InvariantPoly, InvariantError> {
    let mut lx = Lexer { src: src.as_bytes(), pos: 0 };
    let mut seen = Seen::default();
    let mut chern = InvariantPoly::zero(Basis::Chern, maxgen);
    let mut power = InvariantPoly::zero(Basis::PowerSum, maxgen);
    let mut first = true;
    loop {
        let mut sign = int(1);
        match lx.peek() {
            None if first => return Err(lx.err("empty expression")),
            None => break,
            Some(b'+') => lx.pos += 1,
            Some(b'-') => {
                lx.pos += 1;
                sign = int(-1);
            }
            Some(_) if first => {}
            Some(_) => return Err(lx.err("expected '+' or '-'")),
        }
        first = false;
        let (coeff, c_part, t_part) = term(&mut lx, maxgen, &mut seen)?;
        let coeff = coeff * sign;
        match (c_part, t_part) {
            (c, None) => chern = chern.add_ref(&c.scale(&coeff)),
            (c, Some(t)) if c.is_constant_one() => power = power.add_ref(&t.scale(&coeff)),
            (c, Some(t)) => chern = chern.add_ref(&c.mul_ref(&to_chern_basis(&t)).scale(&coeff)),
        }
    }
    Ok(match (seen.chern, seen.power) {
        (false, true) => power,
        _ => chern.add_ref(&to_chern_basis(&power)),
    })
}

impl InvariantPoly<Rat> {
    fn is_constant_one(&self) -> bool {
        self.num_terms() == 1 && self.coeff(&[]).is_one()
    }
}

/// One product; returns the numeric factor, the Chern factor and the
/// power-sum factor (if any).
fn term(
    lx: &mut Lexer<'_>,
    maxgen: u32,
    seen: &mut Seen,
) -> Result<(Rat, InvariantPoly, Option<InvariantPoly>), InvariantError> {
    let mut coeff = int(1);
    let mut c = InvariantPoly::constant(Basis::Chern, maxgen, int(1));
    let mut t: Option<InvariantPoly> = None;
    loop {
        match lx.peek() {
            Some(d) if d.is_ascii_digit() => {
                let num = lx.number()?;
                let mut value = Rat::from(num_bigint::BigInt::from(num));
                if lx.peek() == Some(b'/') {
                    lx.pos += 1;
                    let den = lx.number()?;
                    if den == 0 {
                        return Err(lx.err("zero denominator"));
                    }
                    value /= Rat::from(num_bigint::BigInt::from(den));
                }
                coeff *= value;
            }
            Some(g @ (b'c' | b'T')) => {
                let start = lx.pos;
                lx.pos += 1;
                if !lx.src.get(lx.pos).is_some_and(u8::is_ascii_digit) {
                    return Err(lx.err("expected generator index"));
                }
                let k = lx.number()?;
                let name = format!("{}{k}", g as char);
                if k < 1 || k > maxgen as u64 {
                    return Err(InvariantError::GeneratorOutOfRange { name, maxgen });
                }
                let mut e = 1;
                if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    e = u32::try_from(lx.number()?).map_err(|_| InvariantError::Syntax { pos: start, msg: "exponent too large".into() })?;
                }
                if g == b'c' {
                    seen.chern = true;
                    c = c.mul_ref(&InvariantPoly::generator(Basis::Chern, maxgen, k as u32).pow(e));
                } else {
                    seen.power = true;
                    let factor = InvariantPoly::generator(Basis::PowerSum, maxgen, k as u32).pow(e);
                    t = Some(match t {
                        None => factor,
                        Some(prev) => prev.mul_ref(&factor),
                    });
                }
            }
            Some(_) => return Err(lx.err("expected a number or a generator")),
            None => return Err(lx.err("unexpected end of input")),
        }
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            break;
        }
    }
    Ok((coeff, c, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_and_mixed_input() {
        let p = parse_phi("c2*c3", 5).unwrap();
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.to_string(), "c2*c3");
        assert_eq!(parse_phi("T2 - 2*c2", 2).unwrap().to_string(), "-4*c2 + c1^2");
        assert_eq!(parse_phi(" 1/3 * c1 ^2 -c2", 2).unwrap().to_string(), "-c2 + 1/3*c1^2");
        let t = parse_phi("T1*T2", 2).unwrap();
        assert_eq!(t.basis(), Basis::PowerSum);
        assert_eq!(parse_phi("c1*c1", 2).unwrap(), parse_phi("c1^2", 2).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_phi("c0", 3), Err(InvariantError::GeneratorOutOfRange { .. })));
        assert!(matches!(parse_phi("c4", 3), Err(InvariantError::GeneratorOutOfRange { .. })));
        assert_eq!(parse_phi("c1 +", 3), Err(InvariantError::Syntax { pos: 4, msg: "unexpected end of input".into() }));
        assert!(matches!(parse_phi("c1 c2", 3), Err(InvariantError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_phi("x1", 3), Err(InvariantError::Syntax { pos: 0, .. })));
        assert!(matches!(parse_phi("", 3), Err(InvariantError::Syntax { .. })));
        assert!(matches!(parse_phi("1/0*c1", 3), Err(InvariantError::Syntax { .. })));
    }
}
