//! Builtin example arrangements.

use crate::error::{CliError, Result};

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "triangle",
        summary: "coordinate triangle xyz; three double points",
        text: "projective\nP 1 0 0 H1\nP 0 1 0 H2\nP 0 0 1 H3\n",
    },
    Example {
        name: "pencil3",
        summary: "three concurrent lines x, y, x - y",
        text: "projective\nP 1 0 0 H1\nP 0 1 0 H2\nP 1 -1 0 H3\n",
    },
    Example {
        name: "generic3",
        summary: "three lines in general position x, y, x + y + z",
        text: "projective\nP 1 0 0 H1\nP 0 1 0 H2\nP 1 1 1 H3\n",
    },
    Example {
        name: "braid",
        summary: "braid arrangement xyz(x - y)(x - z)(y - z); four triple points",
        text: "projective\n\
               P 1 0 0 H1\n\
               P 0 1 0 H2\n\
               P 0 0 1 H3\n\
               P 0 1 -1 H4\n\
               P 1 0 -1 H5\n\
               P 1 -1 0 H6\n",
    },
    Example {
        name: "braid-plus-generic",
        summary: "braid arrangement plus the generic line x + 2y + 5z (a generic section of the braid cone)",
        text: "projective\n\
               P 1 0 0 H1\n\
               P 0 1 0 H2\n\
               P 0 0 1 H3\n\
               P 0 1 -1 H4\n\
               P 1 0 -1 H5\n\
               P 1 -1 0 H6\n\
               P 1 2 5 H7\n",
    },
    Example {
        name: "two-pencils",
        summary: "pencils at [0:0:1] and [3:5:1] sharing no line; two isolated triple points",
        text: "projective\n\
               P 1 0 0 H1\n\
               P 0 1 0 H2\n\
               P 1 -1 0 H3\n\
               P 1 0 -3 H4\n\
               P 0 1 -5 H5\n\
               P 1 1 -8 H6\n",
    },
];

pub fn example(name: &str) -> Result<&'static Example> {
    EXAMPLES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CliError::UnknownExample(name.to_string()))
}

pub fn list() -> String {
    let width = EXAMPLES.iter().map(|e| e.name.len()).max().unwrap_or(0);
    EXAMPLES
        .iter()
        .map(|e| format!("{:width$}  {}\n", e.name, e.summary))
        .collect()
}
