use std::fmt;

/// One-based line and column of a character in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    /// A name used before (or without) being declared.
    Unresolved,
    /// Rejected by the core library.
    Semantic,
    /// Bad command-line input that is not part of a document.
    Usage,
}

impl ErrorKind {
    /// Lowercase name used in machine-readable output.
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorKind::Syntax => "syntax",
            ErrorKind::Unresolved => "unresolved",
            ErrorKind::Semantic => "semantic",
            ErrorKind::Usage => "usage",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DslError {
    pub kind: ErrorKind,
    pub message: String,
    pub span: Option<Span>,
}

impl DslError {
    pub fn new(kind: ErrorKind, message: impl Into<String>, span: Option<Span>) -> Self {
        DslError {
            kind,
            message: message.into(),
            span,
        }
    }

    pub fn syntax(message: impl Into<String>, span: Span) -> Self {
        Self::new(ErrorKind::Syntax, message, Some(span))
    }

    pub fn unresolved(what: &str, name: &str, span: Span) -> Self {
        Self::new(ErrorKind::Unresolved, format!("unknown {what} `{name}`"), Some(span))
    }

    pub fn semantic(err: impl fmt::Display, span: Span) -> Self {
        Self::new(ErrorKind::Semantic, err.to_string(), Some(span))
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(ErrorKind::Usage, message, None)
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax error",
            ErrorKind::Unresolved => "unresolved name",
            ErrorKind::Semantic => "error",
            ErrorKind::Usage => "usage error",
        };
        match self.span {
            Some(span) => write!(f, "{span}: {kind}: {}", self.message),
            None => write!(f, "{kind}: {}", self.message),
        }
    }
}

impl std::error::Error for DslError {}
