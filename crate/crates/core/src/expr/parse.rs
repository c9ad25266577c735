use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::Expr;
use crate::basis::Kind;
use crate::rational::Rational;
use crate::MAX_INDEX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<&'static str>, found: String },
    #[error("index {literal} at byte {offset} exceeds the limit {MAX_INDEX}")]
    IndexOverflow { offset: usize, literal: String },
    #[error("zero denominator at byte {offset}")]
    ZeroDenominator { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Symbol(Kind, u64),
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    Circ,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    D0,
    Der,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Symbol(kind, n) => format!("`{}_{n}`", kind.as_str()),
            Token::Int(n) => format!("`{n}`"),
            Token::Slash => "`/`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Circ => "`o`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBracket => "`[`".into(),
            Token::RBracket => "`]`".into(),
            Token::Comma => "`,`".into(),
            Token::Semicolon => "`;`".into(),
            Token::D0 => "`D0`".into(),
            Token::Der => "`der`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

const OPERAND: &[&str] = &["a_<n>", "b_<n>", "<rational>", "(", "[", "D0", "der"];

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits_end = |from: usize| from + bytes[from..].iter().take_while(|b| b.is_ascii_digit()).count();
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            b'/' => Some(Token::Slash),
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'o' => Some(Token::Circ),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            b',' => Some(Token::Comma),
            b';' => Some(Token::Semicolon),
            _ => None,
        };
        if let Some(t) = single {
            out.push((start, t));
            i += 1;
            continue;
        }
        match c {
            b'a' | b'b' => {
                let kind = if c == b'a' { Kind::A } else { Kind::B };
                if bytes.get(i + 1) != Some(&b'_') {
                    return Err(syntax(i + 1, &["_"], found_at(input, i + 1)));
                }
                let end = digits_end(i + 2);
                if end == i + 2 {
                    return Err(syntax(end, &["<index>"], found_at(input, end)));
                }
                let literal = &input[i + 2..end];
                let index = literal
                    .parse::<u64>()
                    .ok()
                    .filter(|&n| n <= MAX_INDEX)
                    .ok_or_else(|| ParseError::IndexOverflow { offset: i + 2, literal: literal.to_string() })?;
                out.push((start, Token::Symbol(kind, index)));
                i = end;
            }
            b'0'..=b'9' => {
                let end = digits_end(i);
                let n: BigInt = input[i..end].parse().expect("ascii digits");
                out.push((start, Token::Int(n)));
                i = end;
            }
            b'D' if bytes.get(i + 1) == Some(&b'0') => {
                out.push((start, Token::D0));
                i += 2;
            }
            b'd' if input[i..].starts_with("der") => {
                out.push((start, Token::Der));
                i += 3;
            }
            _ => {
                let mut expected = OPERAND.to_vec();
                expected.extend(["+", "-", "*", "o", ")", "]", ",", ";", "/"]);
                return Err(syntax(i, &expected, found_at(input, i)));
            }
        }
    }
    out.push((input.len(), Token::Eof));
    Ok(out)
}

fn found_at(input: &str, offset: usize) -> String {
    match input[offset.min(input.len())..].chars().next() {
        Some(c) => format!("`{c}`"),
        None => "end of input".into(),
    }
}

fn syntax(offset: usize, expected: &[&'static str], found: String) -> ParseError {
    ParseError::Syntax { offset, expected: expected.to_vec(), found }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if t != Token::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        syntax(self.offset(), expected, self.peek().describe())
    }

    fn expect(&mut self, token: Token, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if *self.peek() == Token::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Token::Star {
            self.bump();
            lhs = Expr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if let Token::Int(_) = self.peek() {
            let c = self.rational()?;
            if *self.peek() == Token::Star {
                self.bump();
                return Ok(Expr::Scalar(c, Box::new(self.factor()?)));
            }
            return self.novikov_tail(Expr::Rational(c));
        }
        let lhs = self.operand()?;
        self.novikov_tail(lhs)
    }

    fn novikov_tail(&mut self, lhs: Expr) -> Result<Expr, ParseError> {
        if *self.peek() != Token::Circ {
            return Ok(lhs);
        }
        self.bump();
        let rhs = self.operand()?;
        if *self.peek() == Token::Circ {
            return Err(self.error(&["+", "-", "*", ")", "]", ",", ";", "end of input"]));
        }
        Ok(Expr::Novikov(Box::new(lhs), Box::new(rhs)))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let Token::Int(num) = self.bump() else {
            unreachable!("caller checked for an integer");
        };
        if *self.peek() != Token::Slash {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let offset = self.offset();
        match self.bump() {
            Token::Int(den) if den.is_zero() => Err(ParseError::ZeroDenominator { offset }),
            Token::Int(den) => Ok(Rational::new(num, den)),
            other => Err(syntax(offset, &["<denominator>"], other.describe())),
        }
    }

    fn operand(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Token::Symbol(kind, n) => {
                self.bump();
                Ok(Expr::Symbol(kind, n))
            }
            Token::Int(_) => Ok(Expr::Rational(self.rational()?)),
            Token::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Token::RParen, ")")?;
                Ok(e)
            }
            Token::LBracket => {
                self.bump();
                let l = self.expr()?;
                self.expect(Token::Comma, ",")?;
                let r = self.expr()?;
                self.expect(Token::RBracket, "]")?;
                Ok(Expr::Bracket(Box::new(l), Box::new(r)))
            }
            Token::D0 => {
                self.bump();
                self.expect(Token::LParen, "(")?;
                let e = self.expr()?;
                self.expect(Token::RParen, ")")?;
                Ok(Expr::D0(Box::new(e)))
            }
            Token::Der => {
                self.bump();
                self.expect(Token::LParen, "(")?;
                let a = self.expr()?;
                self.expect(Token::Semicolon, ";")?;
                let e = self.expr()?;
                self.expect(Token::RParen, ")")?;
                Ok(Expr::Der(Box::new(a), Box::new(e)))
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser { tokens: tokenize(input)?, pos: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.error(&["+", "-", "*", "o", "end of input"]));
    }
    Ok(e)
}
