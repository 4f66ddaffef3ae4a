//! Command-line front-end for the `bidegree` library.
//!
//! Every subcommand streams line-oriented records (see [`record`]) and maps
//! its outcome to an exit [`Status`]:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | every record graphic / realized                     |
//! | 1    | some record not graphic                             |
//! | 2    | some record inconclusive, none not graphic          |
//! | 3    | input, usage or I/O error (takes precedence)        |

pub mod args;
pub mod bench;
pub mod bound;
pub mod check;
pub mod generate;
pub mod realize;
pub mod record;

pub use args::{run, Cli};

/// Process exit status, combined across records with [`Status::merge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotGraphic,
    Inconclusive,
    InputError,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotGraphic => 1,
            Status::Inconclusive => 2,
            Status::InputError => 3,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Inconclusive => 1,
            Status::NotGraphic => 2,
            Status::InputError => 3,
        }
    }

    /// The more severe of the two.
    pub fn merge(self, other: Status) -> Status {
        if other.rank() > self.rank() {
            other
        } else {
            self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Status::*;

    #[test]
    fn precedence() {
        assert_eq!(Ok.merge(Inconclusive), Inconclusive);
        assert_eq!(Inconclusive.merge(NotGraphic), NotGraphic);
        assert_eq!(NotGraphic.merge(Inconclusive), NotGraphic);
        assert_eq!(InputError.merge(NotGraphic), InputError);
        assert_eq!(Ok.merge(Ok).code(), 0);
    }
}
