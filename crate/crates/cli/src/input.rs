use serde_json::Value;

use ufi::io::{Instance, InstanceJson};
use ufi::monomial::IdealJson;
use ufi::poset::{IndexVectorPoset, PosetJson};
use ufi::MonomialIdeal;

use crate::{Failure, Options};

/// The three JSON documents the tool reads; ideals and posets are the
/// `--json` output of `ideal` and `poset`.
pub enum Input {
    Instance(Instance),
    Ideal(MonomialIdeal),
    Poset(IndexVectorPoset, PosetJson),
}

fn decode<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::parse(format!("parse error: {e}")))
}

pub fn load(text: &str, opts: &Options) -> Result<Input, Failure> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Failure::parse(format!("parse error: {e}")))?;
    let has = |k: &str| v.get(k).is_some();
    if has("generators") {
        let j: IdealJson = decode(v)?;
        return Ok(Input::Ideal(MonomialIdeal::from_json(&j)?));
    }
    if has("elements") {
        let j: PosetJson = decode(v)?;
        return Ok(Input::Poset(IndexVectorPoset::from_json(&j)?, j));
    }
    let j: InstanceJson = decode(v)?;
    let i = Instance::from_json(&j, opts.allow_empty_classes)?;
    opts.limits().check_instance(&i.complex)?;
    Ok(Input::Instance(i))
}

impl Input {
    pub fn instance(&self) -> Result<&Instance, Failure> {
        match self {
            Input::Instance(i) => Ok(i),
            Input::Ideal(_) => Err(Failure::precondition(
                "this command needs a complex with a colouring, not an ideal".into(),
            )),
            Input::Poset(..) => Err(Failure::precondition(
                "this command needs a complex with a colouring, not a poset".into(),
            )),
        }
    }
}
