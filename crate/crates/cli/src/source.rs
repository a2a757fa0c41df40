//! Where a datum comes from: a file or a named preset, optionally
//! specialized at a root of unity.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use hopfmin_core::datum::{parse_datum, preset_cartan, preset_doubled, preset_reductive, CartanType};
use hopfmin_core::scalar::{Field, ScalarError};
use hopfmin_core::{Datum, Scalar};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Simple roots with the Cartan points: the quantum Borel datum.
    Cartan(CartanType),
    /// All roots of the type with identity points, over `Q`.
    Reductive(CartanType),
    /// Simple roots and their negatives sharing the Cartan points.
    Doubled(CartanType),
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| format!("preset `{s}` must look like kind:type"))?;
        let ty = |name: &str| name.parse::<CartanType>().map_err(|e| e.to_string());
        match kind {
            "cartan" => ty(rest).map(Preset::Cartan),
            "doubled" => ty(rest).map(Preset::Doubled),
            "reductive" => {
                let name = rest.strip_suffix("roots").ok_or_else(|| format!("reductive preset `{s}` must end in `roots`"))?;
                ty(name).map(Preset::Reductive)
            }
            other => Err(format!("unknown preset kind `{other}`; expected cartan, reductive or doubled")),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Cartan(t) => write!(f, "cartan:{t}"),
            Preset::Reductive(t) => write!(f, "reductive:{t}roots"),
            Preset::Doubled(t) => write!(f, "doubled:{t}"),
        }
    }
}

impl Preset {
    /// Builds the datum with points powers of `base`.
    pub fn build(self, base: &Scalar) -> Result<Datum, CliError> {
        let built = match self {
            Preset::Cartan(t) => preset_cartan(&t.cartan_matrix(), &t.symmetrizer(), base),
            Preset::Reductive(t) => preset_reductive(&t.roots()),
            Preset::Doubled(t) => preset_doubled(&t.cartan_matrix(), &t.symmetrizer(), base),
        };
        built.map_err(|e| CliError::Input(format!("preset {self}: {e}")))
    }
}

pub fn read_datum_file(path: &Path) -> Result<Datum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_datum(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Specializes `t ↦ ζ_N`, naming the first point coordinate with a pole.
pub fn specialize_datum(datum: &Datum, order: u32) -> Result<Datum, CliError> {
    if order == 0 {
        return Err(CliError::Input("--specialize needs an order of at least 1".into()));
    }
    if let Field::Cyclotomic(n) = datum.field() {
        return Err(CliError::Input(format!("datum is already over cyclotomic({n})")));
    }
    for (i, g) in datum.gammas().iter().enumerate() {
        for (k, x) in g.coords().iter().enumerate() {
            if let Err(ScalarError::Pole { .. }) = x.specialize(order) {
                return Err(CliError::Pole(format!(
                    "gamma[{}][{}] = {} has a pole at a primitive {order}-th root of unity",
                    i + 1,
                    k + 1,
                    x.to_literal()
                )));
            }
        }
    }
    datum.specialize(order).map_err(|e| CliError::Pole(e.to_string()))
}

pub fn parse_base(text: &str) -> Result<Scalar, CliError> {
    Scalar::parse_in(Field::RationalFunction, text).map_err(|e| CliError::Input(format!("--base {text}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_names() {
        for name in ["cartan:A2", "reductive:B2roots", "doubled:A1", "cartan:A1xA1", "cartan:G2"] {
            assert_eq!(name.parse::<Preset>().unwrap().to_string(), name);
        }
        assert!("cartan:E8".parse::<Preset>().is_err());
        assert!("reductive:A2".parse::<Preset>().is_err());
        assert!("A2".parse::<Preset>().is_err());
    }

    #[test]
    fn pole_names_the_coordinate() {
        let base = parse_base("1/(t+1)").unwrap();
        let d = Preset::Cartan(CartanType::A1).build(&base).unwrap();
        let err = specialize_datum(&d, 2).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(err.to_string().contains("gamma[1][1]"), "{err}");
        assert!(specialize_datum(&d, 3).is_ok());
    }
}
