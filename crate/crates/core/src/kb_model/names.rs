use std::fmt;
use std::sync::Arc;

/// Identifiers starting with this prefix are reserved for generated names.
pub const RESERVED_PREFIX: &str = "_";

macro_rules! name_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(text: &str) -> Self {
                $name(Arc::from(text))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }

            pub fn is_reserved(&self) -> bool {
                self.0.starts_with(RESERVED_PREFIX)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({:?})", stringify!($name), &*self.0)
            }
        }

        impl From<&str> for $name {
            fn from(text: &str) -> Self {
                $name::new(text)
            }
        }
    };
}

name_type!(
    /// Element of N_C.
    ConceptName
);
name_type!(
    /// Element of N_R.
    RoleName
);
name_type!(
    /// Element of N_I.
    IndividualName
);
name_type!(
    /// Element of N_S. The universal standpoint is spelled `*`.
    StandpointName
);

impl StandpointName {
    pub const STAR_TEXT: &'static str = "*";

    pub fn star() -> Self {
        StandpointName::new(Self::STAR_TEXT)
    }

    pub fn is_star(&self) -> bool {
        &*self.0 == Self::STAR_TEXT
    }
}
