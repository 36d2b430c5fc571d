use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A coefficient carries `z^{z_exp}` with `z_exp < 0`, so `z = 0` is undefined.
    #[error("pole at z = 0 (term with z^{z_exp})")]
    PoleAtZero { z_exp: i32 },

    #[error("element is not in the quantum plane: term with Th({l})")]
    NotInPlane { l: i64 },

    #[error("lower hypergeometric parameter {param} is a pole within order {order}")]
    ParameterPole { param: String, order: u32 },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("cannot mix enveloping-algebra atom `{u_atom}` with function-algebra atom `{f_atom}`")]
    AlphabetMix { u_atom: String, f_atom: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
