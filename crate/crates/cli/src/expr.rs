//! Class expressions: sums, products and powers of `s<parts>` tokens and
//! integers, e.g. `(s2 + s1_1)*s2_2 - 3*s1^6`.

use symmetroid_core::chow::{ChowError, RingClass, RingRef};
use symmetroid_core::symfunc::Partition;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Chow(#[from] ChowError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ExprError {
    ExprError::Syntax {
        offset,
        message: message.into(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a RingRef,
}

pub fn parse_class_expr(ring: &RingRef, text: &str) -> Result<RingClass, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let c = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(syntax(p.pos, format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(c)
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<RingClass, ExprError> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == b'+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<RingClass, ExprError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.multiply(&self.power()?)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<RingClass, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let e = self.digits().ok_or_else(|| syntax(start, "expected an exponent"))?;
        let e = u32::try_from(e).map_err(|_| syntax(start, "exponent too large"))?;
        Ok(base.pow(e)?)
    }

    fn atom(&mut self) -> Result<RingClass, ExprError> {
        let start = self.pos;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(syntax(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b's') => {
                self.pos += 1;
                let mut parts = Vec::new();
                loop {
                    let at = self.pos;
                    let d = self.digits().ok_or_else(|| syntax(at, "expected a part after 's'"))?;
                    parts.push(u32::try_from(d).map_err(|_| syntax(at, "part too large"))?);
                    if self.src.get(self.pos) == Some(&b'_') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return Err(syntax(start, "parts must be weakly decreasing"));
                }
                Ok(RingClass::schubert(self.ring, &Partition::from_slice(&parts))?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits().expect("digit present");
                let n = i64::try_from(n).map_err(|_| syntax(start, "integer too large"))?;
                Ok(RingClass::integer(self.ring, n))
            }
            Some(c) => Err(syntax(self.pos, format!("unexpected {:?}", c as char))),
            None => Err(syntax(self.pos, "unexpected end of input")),
        }
    }

    fn digits(&mut self) -> Option<u64> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symmetroid_core::chow::{grassmann_ring, integrate};

    fn g35() -> RingRef {
        grassmann_ring(3, 5).unwrap()
    }

    #[test]
    fn powers_and_sums() {
        let g = g35();
        let a = parse_class_expr(&g, "s1^6").unwrap();
        let s1 = RingClass::schubert(&g, &Partition::from_slice(&[1])).unwrap();
        assert_eq!(a, s1.pow(6).unwrap());
        let b = parse_class_expr(&g, " ( s2 + s1_1 ) * s2_2 ").unwrap();
        let c = parse_class_expr(&g, "s2*s2_2 + s1_1*s2_2").unwrap();
        assert_eq!(b, c);
        assert_eq!(
            integrate(&parse_class_expr(&g, "s2*s1^4").unwrap()).unwrap(),
            symmetroid_core::algebra::ring::rat(2)
        );
        assert_eq!(parse_class_expr(&g, "2 - -3").unwrap(), RingClass::integer(&g, 5));
    }

    #[test]
    fn syntax_offsets() {
        let g = g35();
        assert!(matches!(
            parse_class_expr(&g, "s1^^2"),
            Err(ExprError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_class_expr(&g, "s1 +"),
            Err(ExprError::Syntax { offset: 4, .. })
        ));
        assert!(matches!(
            parse_class_expr(&g, "s1_2"),
            Err(ExprError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse_class_expr(&g, "(s1"),
            Err(ExprError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse_class_expr(&g, "s1 x"),
            Err(ExprError::Syntax { offset: 3, .. })
        ));
    }

    #[test]
    fn outside_box_is_a_chow_error() {
        assert!(matches!(parse_class_expr(&g35(), "s3"), Err(ExprError::Chow(_))));
    }
}
