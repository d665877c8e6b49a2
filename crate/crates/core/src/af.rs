//! Argumentation frameworks: arguments, the attack relation, the APX and TGF
//! text formats, and the basic acceptability predicates.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An argument name: letters, digits and underscores, starting with a letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Argument(String);

impl Argument {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_valid_name(&name) {
            Ok(Argument(name))
        } else {
            Err(Error::InvalidArgumentName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for Argument {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Argument::new(s)
    }
}

/// A finite set of arguments together with a binary attack relation over it.
///
/// Frameworks are immutable once built; every constructor checks that both
/// endpoints of each attack are declared arguments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArgumentationFramework {
    arguments: BTreeSet<Argument>,
    attacks: BTreeSet<(Argument, Argument)>,
}

impl ArgumentationFramework {
    pub fn new(
        arguments: impl IntoIterator<Item = Argument>,
        attacks: impl IntoIterator<Item = (Argument, Argument)>,
    ) -> Result<Self> {
        let arguments: BTreeSet<Argument> = arguments.into_iter().collect();
        let attacks: BTreeSet<(Argument, Argument)> = attacks.into_iter().collect();
        for (from, to) in &attacks {
            for endpoint in [from, to] {
                if !arguments.contains(endpoint) {
                    return Err(Error::UnknownArgument(endpoint.to_string()));
                }
            }
        }
        Ok(ArgumentationFramework { arguments, attacks })
    }

    /// Builds a framework from string names; convenient in tests and examples.
    pub fn from_names<'a>(
        arguments: impl IntoIterator<Item = &'a str>,
        attacks: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let arguments = arguments
            .into_iter()
            .map(Argument::new)
            .collect::<Result<Vec<_>>>()?;
        let attacks = attacks
            .into_iter()
            .map(|(a, b)| Ok((Argument::new(a)?, Argument::new(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arguments, attacks)
    }

    pub fn arguments(&self) -> &BTreeSet<Argument> {
        &self.arguments
    }

    pub fn attacks(&self) -> &BTreeSet<(Argument, Argument)> {
        &self.attacks
    }

    pub fn len(&self) -> usize {
        self.arguments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arguments.is_empty()
    }

    pub fn contains(&self, a: &Argument) -> bool {
        self.arguments.contains(a)
    }

    pub fn argument(&self, name: &str) -> Result<&Argument> {
        self.arguments
            .iter()
            .find(|a| a.as_str() == name)
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    pub fn attacks_pair(&self, from: &Argument, to: &Argument) -> bool {
        self.attacks.contains(&(from.clone(), to.clone()))
    }

    fn check_member(&self, a: &Argument) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::UnknownArgument(a.to_string()))
        }
    }

    fn check_subset(&self, set: &BTreeSet<Argument>) -> Result<()> {
        set.iter().try_for_each(|a| self.check_member(a))
    }

    /// Iterates over the attackers of `a` without validating membership.
    pub(crate) fn attackers_of<'a>(
        &'a self,
        a: &'a Argument,
    ) -> impl Iterator<Item = &'a Argument> {
        self.attacks
            .iter()
            .filter(move |(_, to)| to == a)
            .map(|(from, _)| from)
    }

    /// `{b | (b, a) ∈ attacks}`.
    pub fn attackers(&self, a: &Argument) -> Result<BTreeSet<Argument>> {
        self.check_member(a)?;
        Ok(self.attackers_of(a).cloned().collect())
    }

    pub fn is_conflict_free(&self, set: &BTreeSet<Argument>) -> Result<bool> {
        self.check_subset(set)?;
        Ok(!self
            .attacks
            .iter()
            .any(|(from, to)| set.contains(from) && set.contains(to)))
    }

    /// Whether every attacker of `a` is itself attacked by some member of `set`.
    pub fn is_acceptable(&self, a: &Argument, set: &BTreeSet<Argument>) -> Result<bool> {
        self.check_member(a)?;
        self.check_subset(set)?;
        Ok(self.attackers_of(a).all(|attacker| {
            self.attackers_of(attacker)
                .any(|defender| set.contains(defender))
        }))
    }

    pub fn is_admissible(&self, set: &BTreeSet<Argument>) -> Result<bool> {
        if !self.is_conflict_free(set)? {
            return Ok(false);
        }
        for a in set {
            if !self.is_acceptable(a, set)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical APX text: arguments, then attacks, in lexicographic order.
    pub fn to_apx(&self) -> String {
        let mut out = String::new();
        for a in &self.arguments {
            out.push_str(&format!("arg({a}).\n"));
        }
        for (from, to) in &self.attacks {
            out.push_str(&format!("att({from},{to}).\n"));
        }
        out
    }

    /// Canonical TGF text: one node per line, `#`, then one edge per line.
    pub fn to_tgf(&self) -> String {
        let mut out = String::new();
        for a in &self.arguments {
            out.push_str(a.as_str());
            out.push('\n');
        }
        out.push_str("#\n");
        for (from, to) in &self.attacks {
            out.push_str(&format!("{from} {to}\n"));
        }
        out
    }
}

/// Parses the APX fact format: `arg(x).` and `att(x,y).` with `%` line comments.
///
/// Attacks may mention arguments declared later in the text; repeated
/// declarations and repeated attacks are harmless.
pub fn parse_apx(text: &str) -> Result<ArgumentationFramework> {
    let mut lexer = Lexer::new(text);
    let mut arguments = BTreeSet::new();
    let mut attacks = Vec::new();

    loop {
        lexer.skip_trivia();
        if lexer.at_end() {
            break;
        }
        let (line, column) = lexer.position();
        let keyword = lexer.name()?;
        lexer.expect('(')?;
        match keyword.as_str() {
            "arg" => {
                let (name, _, _) = lexer.argument()?;
                lexer.expect(')')?;
                arguments.insert(name);
            }
            "att" => {
                let from = lexer.argument()?;
                lexer.expect(',')?;
                let to = lexer.argument()?;
                lexer.expect(')')?;
                attacks.push((from, to));
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("expected `arg` or `att`, found `{other}`"),
                })
            }
        }
        lexer.expect('.')?;
    }

    let mut pairs = BTreeSet::new();
    for ((from, fl, fc), (to, tl, tc)) in attacks {
        for (name, line, column) in [(&from, fl, fc), (&to, tl, tc)] {
            if !arguments.contains(name) {
                return Err(Error::UndeclaredArgument {
                    name: name.to_string(),
                    line,
                    column,
                });
            }
        }
        pairs.insert((from, to));
    }
    Ok(ArgumentationFramework {
        arguments,
        attacks: pairs,
    })
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn position(&self) -> (usize, usize) {
        (self.line, self.column)
    }

    fn at_end(&mut self) -> bool {
        self.chars.peek().is_none()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
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

    fn error(&self, message: String) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message,
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_trivia();
        match self.chars.peek() {
            Some(&c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(&c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn name(&mut self) -> Result<String> {
        self.skip_trivia();
        let mut name = String::new();
        match self.chars.peek() {
            Some(&c) if c.is_ascii_alphabetic() => {}
            Some(&c) => return Err(self.error(format!("expected a name, found `{c}`"))),
            None => return Err(self.error("expected a name, found end of input".into())),
        }
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok(name)
    }

    fn argument(&mut self) -> Result<(Argument, usize, usize)> {
        self.skip_trivia();
        let (line, column) = self.position();
        let name = self.name()?;
        Ok((Argument(name), line, column))
    }
}

/// Parses Trivial Graph Format: node lines, a `#` line, then `src dst` edge lines.
///
/// Anything after the first token of a node line, or after the second token
/// of an edge line, is treated as a label and ignored.
pub fn parse_tgf(text: &str) -> Result<ArgumentationFramework> {
    let mut arguments = BTreeSet::new();
    let mut attacks = BTreeSet::new();
    let mut in_edges = false;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "#" {
            if in_edges {
                return Err(Error::Syntax {
                    line,
                    column: column_of(raw),
                    message: "duplicate `#` separator".into(),
                });
            }
            in_edges = true;
            continue;
        }
        let mut tokens = tokens_with_columns(raw);
        if !in_edges {
            let (column, name) = tokens.next().expect("non-empty line has a token");
            arguments.insert(tgf_argument(name, line, column)?);
        } else {
            let (fc, from) = tokens.next().expect("non-empty line has a token");
            let Some((tc, to)) = tokens.next() else {
                return Err(Error::Syntax {
                    line,
                    column: raw.len() + 1,
                    message: "edge line needs a source and a target".into(),
                });
            };
            let from = tgf_argument(from, line, fc)?;
            let to = tgf_argument(to, line, tc)?;
            for (arg, column) in [(&from, fc), (&to, tc)] {
                if !arguments.contains(arg) {
                    return Err(Error::UndeclaredArgument {
                        name: arg.to_string(),
                        line,
                        column,
                    });
                }
            }
            attacks.insert((from, to));
        }
    }

    if !in_edges {
        return Err(Error::MissingSeparator);
    }
    Ok(ArgumentationFramework { arguments, attacks })
}

fn tgf_argument(name: &str, line: usize, column: usize) -> Result<Argument> {
    if is_valid_name(name) {
        Ok(Argument(name.to_string()))
    } else {
        Err(Error::Syntax {
            line,
            column,
            message: format!("invalid argument name `{name}`"),
        })
    }
}

fn column_of(raw: &str) -> usize {
    raw[..raw.len() - raw.trim_start().len()].chars().count() + 1
}

fn tokens_with_columns(raw: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = raw;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skipped = rest.len() - rest.trim_start().len();
        offset += rest[..skipped].chars().count();
        rest = &rest[skipped..];
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let column = offset + 1;
        offset += token.chars().count();
        rest = &rest[end..];
        Some((column, token))
    })
}
