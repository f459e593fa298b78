//! Instance files: a representation, an orbit closure, named characters and
//! a task list, or the parameters of a linear free divisor.

use crate::error::{Error, Result};
use crate::rational::{rational_from_json, rational_to_json, Rational};
use crate::repdata::{Character, RepData};
use crate::tautsys::OrbitClosureData;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LfdParams {
    pub n: u32,
    pub roots_bd: Vec<Rational>,
    pub beta_values: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub system: Option<(RepData, OrbitClosureData)>,
    pub characters: BTreeMap<String, Character>,
    pub tasks: Vec<String>,
    /// The matrix `A` when the instance is a GKZ system.
    pub gkz: Option<Vec<Vec<i64>>>,
    pub lfd: Option<LfdParams>,
}

fn rationals(v: &Value, what: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("{what} must be an array")))?
        .iter()
        .enumerate()
        .map(|(k, x)| rational_from_json(x).map_err(|e| Error::Parse(format!("{what}[{k}]: {e}"))))
        .collect()
}

fn integer_matrix(v: &Value) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Parse("gkz.A must be an array of integer rows".into());
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| x.as_i64().ok_or_else(bad))
                .collect()
        })
        .collect()
}

impl Instance {
    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("instance must be a JSON object".into()))?;
        let name = obj
            .get("name")
            .and_then(Value::as_str)
            .unwrap_or("unnamed")
            .to_string();
        let tasks = match obj.get("tasks") {
            None => Vec::new(),
            Some(t) => t
                .as_array()
                .ok_or_else(|| Error::Parse("\"tasks\" must be an array".into()))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| Error::Parse("tasks must be strings".into()))
                })
                .collect::<Result<_>>()?,
        };
        let gkz = obj.get("gkz").map(|g| integer_matrix(g.get("A").unwrap_or(&Value::Null))).transpose()?;
        let system = if obj.contains_key("lie") || obj.contains_key("rep") {
            let rep = RepData::from_json(v)?;
            let orbit = obj
                .get("orbit")
                .ok_or_else(|| Error::Parse("missing \"orbit\" section".into()))?;
            let y = OrbitClosureData::from_json(orbit, &rep)?;
            Some((rep, y))
        } else if let Some(a) = &gkz {
            let (rep, mut y) = crate::catalog::gkz(a)?;
            if let Some(g) = obj.get("orbit").and_then(|o| o.get("gamma")).filter(|g| !g.is_null()) {
                y.gamma = Some(Character::from_json(rep.lie(), g)?);
            }
            Some((rep, y))
        } else {
            None
        };
        let mut characters = BTreeMap::new();
        if let Some(cs) = obj.get("characters") {
            let cs = cs
                .as_object()
                .ok_or_else(|| Error::Parse("\"characters\" must be an object".into()))?;
            let (rep, _) = system.as_ref().ok_or_else(|| {
                Error::Validation("characters given without a representation".into())
            })?;
            for (k, c) in cs {
                let ch = Character::from_json(rep.lie(), c)
                    .map_err(|e| Error::Validation(format!("characters.{k}: {e}")))?;
                characters.insert(k.clone(), ch);
            }
        }
        let lfd = match obj.get("lfd") {
            None => None,
            Some(l) => {
                let n = l
                    .get("n")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("lfd.n must be a positive integer".into()))?
                    as u32;
                let roots_bd = rationals(l.get("roots_bD").unwrap_or(&Value::Null), "lfd.roots_bD")?;
                let beta_values = match l.get("beta_e") {
                    None => Vec::new(),
                    Some(b) => rationals(b, "lfd.beta_e")?,
                };
                crate::dualpar::LfdWindow::new(n, roots_bd.clone(), Rational::from_integer(0.into()))?;
                Some(LfdParams {
                    n,
                    roots_bd,
                    beta_values,
                })
            }
        };
        if system.is_none() && lfd.is_none() {
            return Err(Error::Validation(
                "instance has neither a representation, a GKZ matrix nor LFD data".into(),
            ));
        }
        Ok(Instance {
            name,
            system,
            characters,
            tasks,
            gkz,
            lfd,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        Instance::from_json(&v)
    }

    pub fn from_system(name: &str, rep: RepData, y: OrbitClosureData) -> Self {
        Instance {
            name: name.to_string(),
            system: Some((rep, y)),
            characters: BTreeMap::new(),
            tasks: Vec::new(),
            gkz: None,
            lfd: None,
        }
    }

    pub fn with_character(mut self, name: &str, c: Character) -> Self {
        self.characters.insert(name.to_string(), c);
        self
    }

    pub fn with_tasks(mut self, tasks: &[&str]) -> Self {
        self.tasks = tasks.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn system(&self) -> Result<&(RepData, OrbitClosureData)> {
        self.system.as_ref().ok_or_else(|| {
            Error::Precondition(format!("instance {} has no representation", self.name))
        })
    }

    pub fn character(&self, name: &str) -> Option<&Character> {
        self.characters.get(name)
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("name".into(), json!(self.name));
        if let Some((rep, y)) = &self.system {
            let r = rep.to_json();
            out.insert("lie".into(), r["lie"].clone());
            out.insert("rep".into(), r["rep"].clone());
            let mut orbit = json!({
                "ideal": y.ideal.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "dim_Y": y.dim_y,
            });
            if let Some(g) = &y.gamma {
                orbit["gamma"] = g.to_json();
            }
            if let Some(d) = &y.ci_degrees {
                orbit["ci_degrees"] = json!(d);
            }
            out.insert("orbit".into(), orbit);
        }
        if let Some(a) = &self.gkz {
            out.insert("gkz".into(), json!({ "A": a }));
        }
        if !self.characters.is_empty() {
            let cs: Map<String, Value> = self
                .characters
                .iter()
                .map(|(k, c)| (k.clone(), c.to_json()))
                .collect();
            out.insert("characters".into(), Value::Object(cs));
        }
        if let Some(l) = &self.lfd {
            out.insert(
                "lfd".into(),
                json!({
                    "n": l.n,
                    "roots_bD": l.roots_bd.iter().map(rational_to_json).collect::<Vec<_>>(),
                    "beta_e": l.beta_values.iter().map(rational_to_json).collect::<Vec<_>>(),
                }),
            );
        }
        if !self.tasks.is_empty() {
            out.insert("tasks".into(), json!(self.tasks));
        }
        Value::Object(out)
    }
}
