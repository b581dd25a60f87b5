//! Parsing and formatting of function descriptions.
//!
//! Three sources are accepted on the command line, tagged by prefix:
//! `tt:<hex>` for a truth table, `anf:<expr>` for an algebraic normal form,
//! and `random:<seed>` for a seeded random function. The variable count is
//! always given separately.
//!
//! Truth-table hex is little-endian across the whole string: bit `i` of the
//! value written in hex is the function value at point `i`, and the string
//! has exactly `ceil(2^n / 4)` digits.
//!
//! The ANF grammar joins terms with `+`; a term is `1`, `0`, or variables
//! `x<k>` (1-based, `k <= n`) joined by `*`. Whitespace is ignored and
//! repeated terms cancel over F2.

use nlcore::{BitVec, BooleanFunction, MultilinearPolyF2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A parse failure, with the byte position in the offending payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

/// A function description as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionSpec {
    TtHex(String),
    Anf(String),
    Random { seed: u64 },
}

impl FunctionSpec {
    /// Splits off the `tt:` / `anf:` / `random:` tag.
    pub fn parse(text: &str) -> Result<FunctionSpec, ParseError> {
        if let Some(rest) = text.strip_prefix("tt:") {
            Ok(FunctionSpec::TtHex(rest.to_string()))
        } else if let Some(rest) = text.strip_prefix("anf:") {
            Ok(FunctionSpec::Anf(rest.to_string()))
        } else if let Some(rest) = text.strip_prefix("random:") {
            let seed = rest
                .parse::<u64>()
                .map_err(|_| ParseError::new(0, format!("invalid random seed {rest:?}")))?;
            Ok(FunctionSpec::Random { seed })
        } else {
            Err(ParseError::new(
                0,
                "input must start with tt:, anf:, or random:",
            ))
        }
    }

    /// Builds the function on `n` variables this description denotes.
    pub fn realize(&self, n: usize) -> Result<BooleanFunction, ParseError> {
        match self {
            FunctionSpec::TtHex(text) => parse_tt_hex(text, n),
            FunctionSpec::Anf(text) => parse_anf(text, n),
            FunctionSpec::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok(BooleanFunction::random(n, &mut rng))
            }
        }
    }
}

/// Parses a truth table from at most `ceil(2^n / 4)` hex digits; shorter
/// input reads as having leading zero digits.
pub fn parse_tt_hex(text: &str, n: usize) -> Result<BooleanFunction, ParseError> {
    let bits = 1usize << n;
    let digits = bits.div_ceil(4);
    if text.is_empty() || text.len() > digits {
        return Err(ParseError::new(
            0,
            format!(
                "expected up to {digits} hex digits for n = {n}, got {}",
                text.len()
            ),
        ));
    }
    let mut words = vec![0u64; bits.div_ceil(64)];
    for (i, byte) in text.bytes().rev().enumerate() {
        let pos = text.len() - 1 - i;
        let nibble = (byte as char)
            .to_digit(16)
            .ok_or_else(|| ParseError::new(pos, format!("invalid hex digit {:?}", byte as char)))?
            as u64;
        let bit = 4 * i;
        if bit >= bits || (bit + 4 > bits && nibble >> (bits - bit) != 0) {
            return Err(ParseError::new(
                pos,
                "truth table bits beyond 2^n must be zero",
            ));
        }
        words[bit / 64] |= nibble << (bit % 64);
    }
    Ok(BooleanFunction::new(n, BitVec::from_words(bits, words)))
}

/// Formats a truth table as hex, inverse of [`parse_tt_hex`].
pub fn format_tt_hex(f: &BooleanFunction) -> String {
    let bits = 1usize << f.n();
    let digits = bits.div_ceil(4);
    let mut out = String::with_capacity(digits);
    for d in (0..digits).rev() {
        let mut nibble = 0u32;
        for b in 0..4 {
            let i = 4 * d + b;
            if i < bits && f.value(i) {
                nibble |= 1 << b;
            }
        }
        out.push(char::from_digit(nibble, 16).unwrap());
    }
    out
}

/// Parses an ANF expression into the function it denotes.
pub fn parse_anf(text: &str, n: usize) -> Result<BooleanFunction, ParseError> {
    let mut parser = AnfParser {
        bytes: text.as_bytes(),
        pos: 0,
        n,
    };
    parser.skip_ws();
    if parser.peek().is_none() {
        return Err(ParseError::new(parser.pos, "empty input"));
    }
    let mut anf = MultilinearPolyF2::zero(n);
    loop {
        if let Some(mask) = parser.term()? {
            anf.toggle(mask);
        }
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some(b'+') => {
                parser.pos += 1;
            }
            Some(c) => {
                return Err(ParseError::new(
                    parser.pos,
                    format!("expected '+' or end of input, found {:?}", c as char),
                ));
            }
        }
    }
    Ok(anf.to_function())
}

/// Formats the ANF of a function, monomials in descending degree then
/// descending mask, variables ascending; inverse of [`parse_anf`].
pub fn format_anf(f: &BooleanFunction) -> String {
    let anf = f.anf();
    let mut masks: Vec<u64> = anf.terms().collect();
    if masks.is_empty() {
        return "0".to_string();
    }
    masks.sort_by_key(|&u| std::cmp::Reverse((u.count_ones(), u)));
    masks
        .iter()
        .map(|&u| {
            if u == 0 {
                "1".to_string()
            } else {
                (0..64)
                    .filter(|j| (u >> j) & 1 == 1)
                    .map(|j| format!("x{}", j + 1))
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

struct AnfParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    n: usize,
}

impl AnfParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// One term; `None` stands for the zero term `0`.
    fn term(&mut self) -> Result<Option<u64>, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'1') => {
                self.pos += 1;
                Ok(Some(0))
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(None)
            }
            Some(b'x') => {
                let mut mask = self.variable()?;
                loop {
                    self.skip_ws();
                    if self.peek() == Some(b'*') {
                        self.pos += 1;
                        mask |= self.variable()?;
                    } else {
                        return Ok(Some(mask));
                    }
                }
            }
            Some(c) => Err(ParseError::new(
                self.pos,
                format!("expected '1' or a variable, found {:?}", c as char),
            )),
            None => Err(ParseError::new(self.pos, "expected a term")),
        }
    }

    fn variable(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'x') {
            return Err(ParseError::new(self.pos, "expected a variable like x1"));
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::new(
                start,
                "expected a variable index after 'x'",
            ));
        }
        let index: usize = std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParseError::new(start, "variable index too large"))?;
        if index == 0 || index > self.n {
            return Err(ParseError::new(
                start,
                format!("variable index {index} out of range 1..={}", self.n),
            ));
        }
        Ok(1 << (index - 1))
    }
}
