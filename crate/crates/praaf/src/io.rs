//! Text format for probabilistic argumentation frameworks, plus DOT export.
//!
//! The format extends the APX convention used by argumentation solvers, so
//! a file with only certain elements is a plain APX document:
//!
//! ```text
//! # probabilities in (0,1]; omitted means certain
//! arg(a).
//! arg(c,0.4).
//! att(a,c,0.3).
//! att(c,d).
//! ```
//!
//! Whitespace is insignificant, `#` starts a line comment, and both LF and
//! CRLF are accepted. Serialization is canonical: arguments first, then
//! attacks, each lexicographically, probability 1 omitted, LF endings.

use std::fmt;

use crate::aaf::Attack;
use crate::normal_form::GroundTruth;
use crate::praaf::Praaf;

/// Position-carrying parse error.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownEndpoint(String),
    DuplicateArgument(String),
    DuplicateAttack(String, String),
    ProbabilityOutOfRange(f64),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(message) => write!(f, "syntax error: {message}"),
            ParseErrorKind::UnknownEndpoint(id) => {
                write!(f, "unknown endpoint `{id}` (no matching arg declaration)")
            }
            ParseErrorKind::DuplicateArgument(id) => {
                write!(f, "duplicate declaration of argument `{id}`")
            }
            ParseErrorKind::DuplicateAttack(source, target) => {
                write!(f, "duplicate declaration of attack ({source},{target})")
            }
            ParseErrorKind::ProbabilityOutOfRange(value) => {
                write!(f, "probability {value} outside (0, 1]")
            }
        }
    }
}

/// One parsed statement with its source position (1-based line/column).
#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub line: usize,
    pub column: usize,
    pub kind: StatementKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StatementKind {
    Argument {
        id: String,
        probability: Option<f64>,
    },
    Attack {
        source: String,
        target: String,
        probability: Option<f64>,
    },
}

/// A parsed document: the statement list before referential checks.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub statements: Vec<Statement>,
}

struct Scanner<'a> {
    rest: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            rest: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.rest.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            kind,
        }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax(message.into()))
    }

    fn expect(&mut self, expected: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == expected => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.syntax(format!("expected `{expected}`, found `{c}`"))),
            None => Err(self.syntax(format!("expected `{expected}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if out.is_empty() {
            match self.peek() {
                Some(c) => Err(self.syntax(format!("expected identifier, found `{c}`"))),
                None => Err(self.syntax("expected identifier, found end of input")),
            }
        } else {
            Ok(out)
        }
    }

    /// A decimal literal, scientific notation accepted leniently. The
    /// fractional dot is consumed only when followed by a digit, so a
    /// statement terminator after an integer stays untouched.
    fn number(&mut self) -> Result<f64, ParseError> {
        let (line, column) = (self.line, self.column);
        let mut out = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            out.push(self.bump().unwrap());
        }
        if self.peek() == Some('.') {
            let mut lookahead = self.rest.clone();
            lookahead.next();
            if matches!(lookahead.peek(), Some(c) if c.is_ascii_digit()) {
                out.push(self.bump().unwrap());
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    out.push(self.bump().unwrap());
                }
            }
        }
        if matches!(self.peek(), Some('e') | Some('E')) {
            out.push(self.bump().unwrap());
            if matches!(self.peek(), Some('+') | Some('-')) {
                out.push(self.bump().unwrap());
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                out.push(self.bump().unwrap());
            }
        }
        if out.is_empty() {
            return Err(self.syntax("expected probability literal"));
        }
        out.parse::<f64>().map_err(|_| ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax(format!("malformed probability literal `{out}`")),
        })
    }

    /// Probability with range check at its own position.
    fn probability(&mut self) -> Result<f64, ParseError> {
        let (line, column) = (self.line, self.column);
        let value = self.number()?;
        if value > 0.0 && value <= 1.0 {
            Ok(value)
        } else {
            Err(ParseError {
                line,
                column,
                kind: ParseErrorKind::ProbabilityOutOfRange(value),
            })
        }
    }
}

/// Parses the statement list without referential checks.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut scanner = Scanner::new(text);
    let mut statements = Vec::new();
    loop {
        scanner.skip_trivia();
        if scanner.peek().is_none() {
            return Ok(Document { statements });
        }
        let (line, column) = (scanner.line, scanner.column);
        let keyword = scanner.ident()?;
        scanner.skip_trivia();
        scanner.expect('(')?;
        scanner.skip_trivia();
        let kind = match keyword.as_str() {
            "arg" => {
                let id = scanner.ident()?;
                scanner.skip_trivia();
                let probability = if scanner.peek() == Some(',') {
                    scanner.bump();
                    scanner.skip_trivia();
                    let p = scanner.probability()?;
                    scanner.skip_trivia();
                    Some(p)
                } else {
                    None
                };
                StatementKind::Argument { id, probability }
            }
            "att" => {
                let source = scanner.ident()?;
                scanner.skip_trivia();
                scanner.expect(',')?;
                scanner.skip_trivia();
                let target = scanner.ident()?;
                scanner.skip_trivia();
                let probability = if scanner.peek() == Some(',') {
                    scanner.bump();
                    scanner.skip_trivia();
                    let p = scanner.probability()?;
                    scanner.skip_trivia();
                    Some(p)
                } else {
                    None
                };
                StatementKind::Attack {
                    source,
                    target,
                    probability,
                }
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    kind: ParseErrorKind::Syntax(format!(
                        "expected `arg` or `att`, found `{other}`"
                    )),
                });
            }
        };
        scanner.expect(')')?;
        scanner.skip_trivia();
        scanner.expect('.')?;
        statements.push(Statement { line, column, kind });
    }
}

/// Parses a framework: statements, duplicate detection, and referential
/// integrity (attack endpoints may be declared anywhere in the document).
pub fn parse_praaf(text: &str) -> Result<Praaf, ParseError> {
    let document = parse_document(text)?;
    let mut args: Vec<(String, f64)> = Vec::new();
    let mut attacks: Vec<(Attack, f64)> = Vec::new();
    for statement in &document.statements {
        match &statement.kind {
            StatementKind::Argument { id, probability } => {
                if args.iter().any(|(existing, _)| existing == id) {
                    return Err(ParseError {
                        line: statement.line,
                        column: statement.column,
                        kind: ParseErrorKind::DuplicateArgument(id.clone()),
                    });
                }
                args.push((id.clone(), probability.unwrap_or(1.0)));
            }
            StatementKind::Attack {
                source,
                target,
                probability,
            } => {
                let attack = Attack::new(source.clone(), target.clone());
                if attacks.iter().any(|(existing, _)| *existing == attack) {
                    return Err(ParseError {
                        line: statement.line,
                        column: statement.column,
                        kind: ParseErrorKind::DuplicateAttack(source.clone(), target.clone()),
                    });
                }
                attacks.push((attack, probability.unwrap_or(1.0)));
            }
        }
    }
    for statement in &document.statements {
        if let StatementKind::Attack { source, target, .. } = &statement.kind {
            for endpoint in [source, target] {
                if !args.iter().any(|(id, _)| id == endpoint) {
                    return Err(ParseError {
                        line: statement.line,
                        column: statement.column,
                        kind: ParseErrorKind::UnknownEndpoint(endpoint.clone()),
                    });
                }
            }
        }
    }
    Ok(Praaf::new(args, attacks))
}

/// Renders a probability with up to 12 significant digits, trailing zeros
/// trimmed, plain decimal notation.
pub fn format_probability(p: f64) -> String {
    if p == 0.0 {
        return "0".to_owned();
    }
    let magnitude = p.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let rendered = format!("{p:.decimals$}");
    let trimmed = rendered.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_owned()
}

/// Canonical serialization: arguments lexicographic, then attacks
/// lexicographic by (source, target); probability 1 omitted.
/// `parse_praaf(serialize_praaf(p))` reproduces `p`.
pub fn serialize_praaf(praaf: &Praaf) -> String {
    let mut out = String::new();
    for (id, p) in praaf.args() {
        if p >= 1.0 {
            out.push_str(&format!("arg({id}).\n"));
        } else {
            out.push_str(&format!("arg({id},{}).\n", format_probability(p)));
        }
    }
    for (att, p) in praaf.attacks() {
        if p >= 1.0 {
            out.push_str(&format!("att({},{}).\n", att.source, att.target));
        } else {
            out.push_str(&format!(
                "att({},{},{}).\n",
                att.source,
                att.target,
                format_probability(p)
            ));
        }
    }
    out
}

/// DOT export. Arguments are circles (the ground truth a double circle
/// when given), attacks are arrows, and probabilistic elements carry their
/// probability as a label. Output is deterministic.
pub fn to_dot(praaf: &Praaf, eta: Option<&GroundTruth>) -> String {
    let mut out = String::from("digraph praaf {\n  rankdir=LR;\n");
    for (id, p) in praaf.args() {
        let shape = match eta {
            Some(eta) if eta.id() == id => "doublecircle",
            _ => "circle",
        };
        if p >= 1.0 {
            out.push_str(&format!("  \"{id}\" [shape={shape}];\n"));
        } else {
            out.push_str(&format!(
                "  \"{id}\" [shape={shape},label=\"{id}\\n{}\"];\n",
                format_probability(p)
            ));
        }
    }
    for (att, p) in praaf.attacks() {
        if p >= 1.0 {
            out.push_str(&format!("  \"{}\" -> \"{}\";\n", att.source, att.target));
        } else {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                att.source,
                att.target,
                format_probability(p)
            ));
        }
    }
    out.push_str("}\n");
    out
}
