//! Body-spec grammar: `family:key=value,key=value`.
//!
//! ```text
//! ball:n=3
//! segment:n=3,len=1
//! planar:A=2,p=5.2[,R=1]
//! lens:R=1,p=5.2
//! cap:n=15,alpha=0.5[,w0=1]
//! twotan:n=15,beta=1e-6,alpha=1e-6[,w0=1]
//! cross:lams=0.01x10,1x10
//! binbody:n=15,k=2
//! ```

use super::BodySpec;
use crate::{Error, Result};

struct Field<'a> {
    key: &'a str,
    value: String,
    pos: usize,
    used: bool,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

struct Fields<'a> {
    fields: Vec<Field<'a>>,
    end: usize,
}

impl<'a> Fields<'a> {
    fn take(&mut self, key: &str) -> Option<(String, usize)> {
        self.fields.iter_mut().find(|f| f.key == key).map(|f| {
            f.used = true;
            (f.value.clone(), f.pos)
        })
    }

    fn required(&mut self, key: &str) -> Result<(String, usize)> {
        self.take(key)
            .ok_or_else(|| err(self.end, format!("missing parameter `{key}`")))
    }

    fn float(&mut self, key: &str) -> Result<f64> {
        let (v, pos) = self.required(key)?;
        parse_float(&v, pos)
    }

    fn float_or(&mut self, key: &str, default: f64) -> Result<f64> {
        match self.take(key) {
            Some((v, pos)) => parse_float(&v, pos),
            None => Ok(default),
        }
    }

    fn int(&mut self, key: &str) -> Result<usize> {
        let (v, pos) = self.required(key)?;
        v.parse()
            .map_err(|_| err(pos, format!("`{v}` is not a nonnegative integer")))
    }

    fn finish(self) -> Result<()> {
        match self.fields.iter().find(|f| !f.used) {
            Some(f) => Err(err(
                f.pos - f.key.len() - 1,
                format!("unknown parameter `{}`", f.key),
            )),
            None => Ok(()),
        }
    }
}

fn parse_float(v: &str, pos: usize) -> Result<f64> {
    match v.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => Err(err(pos, format!("`{v}` is not a finite number"))),
    }
}

/// `v` or `vxk` items separated by commas.
fn parse_lambdas(v: &str, pos: usize) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    let mut offset = pos;
    for item in v.split(',') {
        let (value, count) = match item.split_once('x') {
            Some((value, count)) => {
                let c: usize = count
                    .parse()
                    .map_err(|_| err(offset, format!("bad repeat count in `{item}`")))?;
                (value, c)
            }
            None => (item, 1),
        };
        let x = parse_float(value, offset)?;
        out.extend(std::iter::repeat_n(x, count));
        offset += item.len() + 1;
    }
    Ok(out)
}

pub(super) fn parse_body_spec(s: &str) -> Result<BodySpec> {
    let (family, rest) = s
        .split_once(':')
        .ok_or_else(|| err(s.len(), "expected `family:parameters`"))?;
    let mut fields: Vec<Field> = Vec::new();
    let mut pos = family.len() + 1;
    if !rest.is_empty() {
        for token in rest.split(',') {
            match token.split_once('=') {
                Some((key, value)) => {
                    if key.is_empty() {
                        return Err(err(pos, "empty parameter name"));
                    }
                    if fields.iter().any(|f| f.key == key) {
                        return Err(err(pos, format!("duplicate parameter `{key}`")));
                    }
                    fields.push(Field {
                        key,
                        value: value.to_string(),
                        pos: pos + key.len() + 1,
                        used: false,
                    });
                }
                // Continuation of a list value such as `lams=0.1,0.2`.
                None => match fields.last_mut() {
                    Some(f) if f.key == "lams" => {
                        f.value.push(',');
                        f.value.push_str(token);
                    }
                    _ => return Err(err(pos, format!("expected `key=value`, found `{token}`"))),
                },
            }
            pos += token.len() + 1;
        }
    }
    let mut f = Fields {
        fields,
        end: s.len(),
    };

    let spec = match family {
        "ball" => BodySpec::Ball { n: f.int("n")? },
        "segment" => BodySpec::Segment {
            n: f.int("n")?,
            length: f.float("len")?,
        },
        "planar" => BodySpec::Planar3D {
            area: f.float("A")?,
            perimeter: f.float("p")?,
            circumradius: match f.take("R") {
                Some((v, pos)) => Some(parse_float(&v, pos)?),
                None => None,
            },
        },
        "lens" => BodySpec::Lens {
            circumradius: f.float("R")?,
            perimeter: f.float("p")?,
        },
        "cap" => BodySpec::CapBody {
            n: f.int("n")?,
            alpha: f.float("alpha")?,
            w0: f.float_or("w0", 1.0)?,
        },
        "twotan" => BodySpec::TwoTangential {
            n: f.int("n")?,
            beta: f.float("beta")?,
            alpha: f.float("alpha")?,
            w0: f.float_or("w0", 1.0)?,
        },
        "cross" => {
            let (v, pos) = f.required("lams")?;
            BodySpec::Crosspolytope {
                lambdas: parse_lambdas(&v, pos)?,
            }
        }
        "binbody" => BodySpec::TruncatedBinomialBody {
            n: f.int("n")?,
            k: f.int("k")?,
        },
        other => return Err(err(0, format!("unknown body family `{other}`"))),
    };
    f.finish()?;
    Ok(spec)
}
