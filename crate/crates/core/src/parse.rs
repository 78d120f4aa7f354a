//! Minimal cursor used by the `FromStr` impls of the model types.

use crate::error::ParseError;

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    pub(crate) fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError {
            position: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    /// Reads a non-negative decimal integer.
    pub(crate) fn integer<T: std::str::FromStr>(&mut self) -> Result<T, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("non-negative integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| ParseError {
            position: start,
            expected: "integer in range".to_string(),
            found: format!("'{}'", &self.text[start..self.pos]),
        })
    }

    pub(crate) fn position(&self) -> usize {
        self.pos
    }

    /// Comma separated list of integers; an empty input yields an empty list.
    pub(crate) fn integer_list<T: std::str::FromStr>(&mut self) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.at_end() {
            return Ok(out);
        }
        out.push(self.integer()?);
        while self.eat(',') {
            out.push(self.integer()?);
        }
        self.expect_end()?;
        Ok(out)
    }
}
