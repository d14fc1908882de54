//! Lexer, syntax tree, parser and printer for `.qv` documents.
//!
//! ```text
//! graph E {
//!     vertices: 1 2 3;
//!     edges:
//!         e: 1 -> 2;
//!         loops: 2 -> 2 * 3;
//!         many: 1 -> 3 * inf;
//! }
//! hom theta: F -> E path { 1 -> 1; f -> e.e2; g -> 2; }
//! relation R: E -> F { vertices: (1, 1) (2, 2); edges: (e, f); }
//! relation S = compose T R;
//! ```

use std::fmt::{self, Write as _};

use relgraph::Cardinality;

use crate::error::{DslError, Span};

/// A value with the position it was read from. Spans are ignored by `==`,
/// so reprinted documents compare equal to their originals.
#[derive(Debug, Clone, Eq)]
pub struct Spanned<T> {
    pub value: T,
    pub span: Span,
}

impl<T: PartialEq> PartialEq for Spanned<T> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<T> Spanned<T> {
    pub fn new(value: T, span: Span) -> Self {
        Spanned { value, span }
    }
}

pub type Name = Spanned<String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDecl {
    pub name: Name,
    pub source: Name,
    pub target: Name,
    pub cardinality: Cardinality,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDecl {
    pub name: Name,
    pub vertices: Vec<Name>,
    pub edges: Vec<EdgeDecl>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    Graph,
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomDecl {
    pub name: Name,
    pub domain: Name,
    pub codomain: Name,
    pub kind: HomKind,
    /// `lhs -> rhs` entries; the right side is a path, vertex or family.
    pub maps: Vec<(Name, Name)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationBody {
    Generators {
        domain: Name,
        codomain: Name,
        vertices: Vec<(Name, Name)>,
        edges: Vec<(Name, Name)>,
    },
    Lift(Name),
    Lower(Name),
    Compose(Name, Name),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDecl {
    pub name: Name,
    pub body: RelationBody,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Graph(GraphDecl),
    Hom(HomDecl),
    Relation(RelationDecl),
}

impl Item {
    pub fn name(&self) -> &Name {
        match self {
            Item::Graph(g) => &g.name,
            Item::Hom(h) => &h.name,
            Item::Relation(r) => &r.name,
        }
    }

    pub fn span(&self) -> Span {
        self.name().span
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Punct(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Punct(p) => write!(f, "`{p}`"),
        }
    }
}

/// Characters allowed in names besides letters and digits.
pub fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || "_'′″~".contains(c)
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        let start = i;
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c.is_whitespace() {
            i += 1;
        } else if is_name_char(c) {
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), span));
        } else if c == '-' {
            if chars.get(i + 1) != Some(&'>') {
                return Err(DslError::syntax("expected `->`", span));
            }
            i += 2;
            out.push((Tok::Punct("->"), span));
        } else {
            let p = match c {
                '{' => "{",
                '}' => "}",
                '(' => "(",
                ')' => ")",
                '[' => "[",
                ']' => "]",
                ';' => ";",
                ':' => ":",
                ',' => ",",
                '.' => ".",
                '*' => "*",
                '=' => "=",
                _ => return Err(DslError::syntax(format!("unexpected character `{c}`"), span)),
            };
            i += 1;
            out.push((Tok::Punct(p), span));
        }
        for &c in &chars[start..i] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
    end: Span,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn span(&self) -> Span {
        self.toks.get(self.pos).map_or(self.end, |(_, s)| *s)
    }

    fn error(&self, expected: &str) -> DslError {
        let found = self.peek().map_or("end of input".to_string(), |t| t.to_string());
        DslError::syntax(format!("expected {expected}, found {found}"), self.span())
    }

    fn at_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn at_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == w)
    }

    fn punct(&mut self, p: &str) -> Result<Span, DslError> {
        if self.at_punct(p) {
            self.pos += 1;
            Ok(self.toks[self.pos - 1].1)
        } else {
            Err(self.error(&format!("`{p}`")))
        }
    }

    fn name(&mut self) -> Result<Name, DslError> {
        match self.toks.get(self.pos) {
            Some((Tok::Ident(s), span)) => {
                let n = Spanned::new(s.clone(), *span);
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("a name")),
        }
    }

    fn number(&mut self) -> Result<usize, DslError> {
        let n = self.name()?;
        n.value
            .parse()
            .map_err(|_| DslError::syntax(format!("expected a number, found `{}`", n.value), n.span))
    }

    /// `name([index])?(.name([index])?)*`, returned as text.
    fn reference(&mut self) -> Result<Name, DslError> {
        let first = self.name()?;
        let span = first.span;
        let mut text = first.value;
        loop {
            if self.at_punct("[") {
                self.pos += 1;
                let i = self.number()?;
                self.punct("]")?;
                write!(text, "[{i}]").expect("string write");
            }
            if !self.at_punct(".") {
                break;
            }
            self.pos += 1;
            text.push('.');
            text.push_str(&self.name()?.value);
        }
        Ok(Spanned::new(text, span))
    }

    fn pair(&mut self) -> Result<(Name, Name), DslError> {
        self.punct("(")?;
        let a = self.reference()?;
        self.punct(",")?;
        let b = self.reference()?;
        self.punct(")")?;
        Ok((a, b))
    }

    fn pairs_until_semi(&mut self) -> Result<Vec<(Name, Name)>, DslError> {
        let mut out = Vec::new();
        while !self.at_punct(";") {
            out.push(self.pair()?);
        }
        self.punct(";")?;
        Ok(out)
    }

    fn item(&mut self) -> Result<Item, DslError> {
        if self.at_word("graph") {
            self.pos += 1;
            self.graph().map(Item::Graph)
        } else if self.at_word("hom") {
            self.pos += 1;
            self.hom().map(Item::Hom)
        } else if self.at_word("relation") {
            self.pos += 1;
            self.relation().map(Item::Relation)
        } else {
            Err(self.error("`graph`, `hom` or `relation`"))
        }
    }

    fn graph(&mut self) -> Result<GraphDecl, DslError> {
        let name = self.name()?;
        self.punct("{")?;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        if self.at_word("vertices") {
            self.pos += 1;
            self.punct(":")?;
            while !self.at_punct(";") {
                // `edges:` here means the vertex list lost its `;`.
                if self.at_word("edges") && matches!(self.toks.get(self.pos + 1), Some((Tok::Punct(":"), _))) {
                    return Err(self.error("`;`"));
                }
                vertices.push(self.name()?);
            }
            self.punct(";")?;
        }
        if self.at_word("edges") {
            self.pos += 1;
            self.punct(":")?;
            while !self.at_punct("}") {
                let name = self.name()?;
                self.punct(":")?;
                let source = self.name()?;
                self.punct("->")?;
                let target = self.name()?;
                let mut cardinality = Cardinality::Finite(1);
                if self.at_punct("*") {
                    self.pos += 1;
                    cardinality = if self.at_word("inf") {
                        self.pos += 1;
                        Cardinality::Infinite
                    } else {
                        Cardinality::Finite(self.number()?)
                    };
                }
                self.punct(";")?;
                edges.push(EdgeDecl {
                    name,
                    source,
                    target,
                    cardinality,
                });
            }
        }
        self.punct("}")?;
        Ok(GraphDecl { name, vertices, edges })
    }

    fn hom(&mut self) -> Result<HomDecl, DslError> {
        let name = self.name()?;
        self.punct(":")?;
        let domain = self.name()?;
        self.punct("->")?;
        let codomain = self.name()?;
        let kind = if self.at_word("graph") {
            HomKind::Graph
        } else if self.at_word("path") {
            HomKind::Path
        } else {
            return Err(self.error("`graph` or `path`"));
        };
        self.pos += 1;
        self.punct("{")?;
        let mut maps = Vec::new();
        while !self.at_punct("}") {
            let lhs = self.reference()?;
            self.punct("->")?;
            let rhs = self.reference()?;
            self.punct(";")?;
            maps.push((lhs, rhs));
        }
        self.punct("}")?;
        Ok(HomDecl {
            name,
            domain,
            codomain,
            kind,
            maps,
        })
    }

    fn relation(&mut self) -> Result<RelationDecl, DslError> {
        let name = self.name()?;
        if self.at_punct("=") {
            self.pos += 1;
            let body = if self.at_word("lift") {
                self.pos += 1;
                RelationBody::Lift(self.name()?)
            } else if self.at_word("lower") {
                self.pos += 1;
                RelationBody::Lower(self.name()?)
            } else if self.at_word("compose") {
                self.pos += 1;
                RelationBody::Compose(self.name()?, self.name()?)
            } else {
                return Err(self.error("`lift`, `lower` or `compose`"));
            };
            self.punct(";")?;
            return Ok(RelationDecl { name, body });
        }
        self.punct(":")?;
        let domain = self.name()?;
        self.punct("->")?;
        let codomain = self.name()?;
        self.punct("{")?;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        if self.at_word("vertices") {
            self.pos += 1;
            self.punct(":")?;
            vertices = self.pairs_until_semi()?;
        }
        if self.at_word("edges") {
            self.pos += 1;
            self.punct(":")?;
            edges = self.pairs_until_semi()?;
        }
        self.punct("}")?;
        Ok(RelationDecl {
            name,
            body: RelationBody::Generators {
                domain,
                codomain,
                vertices,
                edges,
            },
        })
    }
}

/// Parses the syntax of a document without resolving names.
pub fn parse_items(text: &str) -> Result<Vec<Item>, DslError> {
    let toks = lex(text)?;
    let lines = text.split('\n').count();
    let last = text.rsplit('\n').next().unwrap_or("");
    let end = Span {
        line: lines,
        col: last.chars().count() + 1,
    };
    let mut p = Parser { toks, pos: 0, end };
    let mut items = Vec::new();
    while p.peek().is_some() {
        items.push(p.item()?);
    }
    Ok(items)
}

/// Prints items in the canonical layout; the output parses back to equal
/// items.
pub fn print_items(items: &[Item]) -> String {
    let mut out = String::new();
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        print_item(&mut out, item);
    }
    out
}

fn print_item(out: &mut String, item: &Item) {
    match item {
        Item::Graph(g) => {
            writeln!(out, "graph {} {{", g.name.value).expect("string write");
            let names: Vec<&str> = g.vertices.iter().map(|v| v.value.as_str()).collect();
            writeln!(out, "    vertices: {};", names.join(" ")).expect("string write");
            if !g.edges.is_empty() {
                out.push_str("    edges:\n");
                for e in &g.edges {
                    write!(
                        out,
                        "        {}: {} -> {}",
                        e.name.value, e.source.value, e.target.value
                    )
                    .expect("string write");
                    match e.cardinality {
                        Cardinality::Finite(1) => {}
                        Cardinality::Finite(k) => write!(out, " * {k}").expect("string write"),
                        Cardinality::Infinite => out.push_str(" * inf"),
                    }
                    out.push_str(";\n");
                }
            }
            out.push_str("}\n");
        }
        Item::Hom(h) => {
            let kind = match h.kind {
                HomKind::Graph => "graph",
                HomKind::Path => "path",
            };
            writeln!(
                out,
                "hom {}: {} -> {} {kind} {{",
                h.name.value, h.domain.value, h.codomain.value
            )
            .expect("string write");
            for (a, b) in &h.maps {
                writeln!(out, "    {} -> {};", a.value, b.value).expect("string write");
            }
            out.push_str("}\n");
        }
        Item::Relation(r) => match &r.body {
            RelationBody::Generators {
                domain,
                codomain,
                vertices,
                edges,
            } => {
                writeln!(
                    out,
                    "relation {}: {} -> {} {{",
                    r.name.value, domain.value, codomain.value
                )
                .expect("string write");
                let pairs = |ps: &[(Name, Name)]| {
                    ps.iter()
                        .map(|(a, b)| format!("({}, {})", a.value, b.value))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(out, "    vertices: {};", pairs(vertices)).expect("string write");
                if !edges.is_empty() {
                    writeln!(out, "    edges: {};", pairs(edges)).expect("string write");
                }
                out.push_str("}\n");
            }
            RelationBody::Lift(h) => {
                writeln!(out, "relation {} = lift {};", r.name.value, h.value).expect("string write")
            }
            RelationBody::Lower(h) => {
                writeln!(out, "relation {} = lower {};", r.name.value, h.value).expect("string write")
            }
            RelationBody::Compose(a, b) => {
                writeln!(out, "relation {} = compose {} {};", r.name.value, a.value, b.value).expect("string write")
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_graph() {
        let items = parse_items("graph E { vertices: 1 2; edges: e: 1 -> 2; }").unwrap();
        let Item::Graph(g) = &items[0] else { panic!() };
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges[0].target.value, "2");
    }

    #[test]
    fn reports_positions() {
        let err = parse_items("graph E {\n  vertices: 1 2\n  edges: e 1 -> 2; }").unwrap_err();
        assert_eq!(err.span, Some(Span { line: 3, col: 3 }));
        let err = parse_items("graph E { vertices: 1 - 2; }").unwrap_err();
        assert_eq!(err.span, Some(Span { line: 1, col: 23 }));
    }

    #[test]
    fn comments_and_members() {
        let text = "# header\nhom h: A -> B graph { // maps\n  f[2] -> g[2];\n  x -> a.b.c;\n}";
        let items = parse_items(text).unwrap();
        let Item::Hom(h) = &items[0] else { panic!() };
        assert_eq!(h.maps[0].0.value, "f[2]");
        assert_eq!(h.maps[1].1.value, "a.b.c");
        assert_eq!(parse_items(&print_items(&items)).unwrap(), items);
    }
}
