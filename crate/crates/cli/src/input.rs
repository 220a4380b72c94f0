use std::path::Path;

use posr_core::constructions::{construct, parse_construction};
use posr_core::format::parse_psr;
use posr_core::ringlab::{make_ring, read_ring_file, FiniteRing};
use posr_core::{PoSemiringTable, RawTables};

/// A failure that ends the run with exit status 2.
#[derive(Debug)]
pub struct Fatal(pub String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

pub fn read_raw(path: &Path) -> Result<RawTables, Fatal> {
    let shown = path.display();
    let text = std::fs::read_to_string(path).map_err(|e| Fatal(format!("{shown}: {e}")))?;
    parse_psr(&text).map_err(|e| Fatal(format!("{shown}: {e}")))
}

/// A `psr 1` file when the path exists, a construction spec otherwise.
pub fn load_instance(arg: &str) -> Result<PoSemiringTable, Fatal> {
    let path = Path::new(arg);
    if path.exists() {
        let raw = read_raw(path)?;
        return PoSemiringTable::from_raw(&raw).map_err(|e| Fatal(format!("{arg}: {e}")));
    }
    let spec = parse_construction(arg).map_err(|e| Fatal(format!("{arg}: {e}")))?;
    construct(&spec).map_err(|e| Fatal(format!("{arg}: {e}")))
}

/// A `ring 1` file when the path exists, a ring spec such as `zn:12`
/// otherwise.
pub fn load_ring(arg: &str) -> Result<FiniteRing, Fatal> {
    let path = Path::new(arg);
    let ring = if path.exists() {
        read_ring_file(path)
    } else {
        make_ring(arg)
    };
    ring.map_err(|e| {
        let msg = e.to_string();
        if msg.starts_with(arg) {
            Fatal(msg)
        } else {
            Fatal(format!("{arg}: {msg}"))
        }
    })
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), Fatal> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Fatal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
