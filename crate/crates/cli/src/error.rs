use std::fmt;

use mvkt_core::{AbelianError, NerveError, SpecSeqError, TwistError};

/// Exit-status classes of the command-line contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Category {
    /// Bad arguments, unreadable files, failed writes.
    Usage,
    /// The scenario does not parse or does not match the schema.
    Schema,
    /// Inputs parse but violate a mathematical precondition.
    Validation,
    /// Inputs are valid but outside the regime the pipeline can handle.
    Unsupported,
    /// `--verify` found a disagreement with an oracle.
    Disagreement,
}

impl Category {
    pub fn exit_code(self) -> i32 {
        match self {
            Category::Usage => 1,
            Category::Schema => 2,
            Category::Validation => 3,
            Category::Unsupported => 4,
            Category::Disagreement => 5,
        }
    }
}

/// A failure with a module-qualified code such as `twist.NotInvolutive`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub category: Category,
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn new(category: Category, code: impl Into<String>, message: impl Into<String>) -> Self {
        CliError {
            category,
            code: code.into(),
            message: message.into(),
        }
    }

    pub fn schema(message: impl Into<String>) -> Self {
        Self::new(Category::Schema, "cli.Schema", message)
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self::new(Category::Usage, "cli.Io", message)
    }

    pub fn exit_code(&self) -> i32 {
        self.category.exit_code()
    }

    /// Prefixes the message with where in the scenario the problem sits.
    pub fn at(mut self, location: &str) -> Self {
        self.message = format!("{location}: {}", self.message);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<NerveError> for CliError {
    fn from(e: NerveError) -> Self {
        let name = match &e {
            NerveError::VertexOutOfRange { .. } => "VertexOutOfRange",
            NerveError::EmptySimplex => "EmptySimplex",
            NerveError::RepeatedVertex(_) => "RepeatedVertex",
            NerveError::DimensionOutOfRange { .. } => "DimensionOutOfRange",
            NerveError::EmptyCoverSet { .. } => "EmptyCoverSet",
            NerveError::ElementOutOfRange { .. } => "ElementOutOfRange",
            NerveError::EmptyGroundSet => "EmptyGroundSet",
            NerveError::CoverViolated(_) => "CoverViolated",
        };
        CliError::new(Category::Validation, format!("nerve.{name}"), e.to_string())
    }
}

impl From<TwistError> for CliError {
    fn from(e: TwistError) -> Self {
        let name = match &e {
            TwistError::NotWellDefined { .. } => "NotWellDefined",
            TwistError::NotBijective { .. } => "NotBijective",
            TwistError::NotInvolutive { .. } => "NotInvolutive",
            TwistError::NotACocycle => "NotACocycle",
            TwistError::UnknownSimplex(_) => "UnknownSimplex",
            TwistError::DuplicateSimplex(_) => "DuplicateSimplex",
            TwistError::LengthMismatch { .. } => "LengthMismatch",
            TwistError::NotABit(_) => "NotABit",
        };
        CliError::new(Category::Validation, format!("twist.{name}"), e.to_string())
    }
}

impl From<AbelianError> for CliError {
    fn from(e: AbelianError) -> Self {
        let name = match &e {
            AbelianError::ShapeMismatch { .. } => "ShapeMismatch",
            AbelianError::NotWellDefined { .. } => "NotWellDefined",
            AbelianError::NotComposable => "NotComposable",
            AbelianError::NotEndomorphism => "NotEndomorphism",
            AbelianError::NotCanonical(_) => "NotCanonical",
            AbelianError::MalformedComplex(_) => "MalformedComplex",
            AbelianError::BoundaryNotNilpotent { .. } => "BoundaryNotNilpotent",
            AbelianError::DegreeOutOfRange { .. } => "DegreeOutOfRange",
        };
        CliError::new(Category::Validation, format!("abelian.{name}"), e.to_string())
    }
}

impl From<SpecSeqError> for CliError {
    fn from(e: SpecSeqError) -> Self {
        let message = e.to_string();
        let (category, name) = match e {
            SpecSeqError::Twist(inner) => return inner.into(),
            SpecSeqError::Abelian(inner) => return inner.into(),
            SpecSeqError::EmptyNerve => (Category::Validation, "EmptyNerve"),
            SpecSeqError::TwistedRunUnsupported(_) => (Category::Unsupported, "TwistedRunUnsupported"),
            SpecSeqError::CoefficientDegreeMismatch { .. } => (Category::Unsupported, "CoefficientDegreeMismatch"),
            SpecSeqError::UnsupportedDimension { .. } => (Category::Unsupported, "UnsupportedDimension"),
            SpecSeqError::WrongPage { .. } => (Category::Usage, "WrongPage"),
        };
        CliError::new(category, format!("specseq.{name}"), message)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mvkt_core::twist::CoefficientMap;

    #[test]
    fn codes_are_module_qualified() {
        let e: CliError = SpecSeqError::Twist(TwistError::NotInvolutive {
            map: CoefficientMap::Phi1,
        })
        .into();
        assert_eq!(e.code, "twist.NotInvolutive");
        assert_eq!(e.exit_code(), 3);
        let e: CliError = SpecSeqError::UnsupportedDimension { dimension: 3 }.into();
        assert_eq!((e.code.as_str(), e.exit_code()), ("specseq.UnsupportedDimension", 4));
        assert_eq!(CliError::schema("x").exit_code(), 2);
    }
}
