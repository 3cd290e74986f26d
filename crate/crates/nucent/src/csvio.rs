//! Scan table: one flat CSV with a fixed header.

use std::io::{Read, Write};
use std::path::Path;

use nucent_core::entropy::EntropyRecord;
use nucent_core::observables::FM2_TO_MB;
use nucent_core::Projectile;
use serde::{Deserialize, Serialize};

use crate::config::{parse_projectile, Target};
use crate::error::{AppError, Result};

pub const HEADER: [&str; 12] = [
    "projectile", "Z", "N", "A", "T_MeV", "k_invfm", "lmax", "sigma_e_mb", "sigma_r_mb", "sigma_t_mb", "S_nats", "flag",
];

pub const FLAG_OK: &str = "ok";

/// Round to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// One scan point. Failed points keep their coordinates, carry NaN numeric
/// fields and an error flag.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub projectile: Projectile,
    pub target: Target,
    pub t: f64,
    pub k: f64,
    pub lmax: Option<u32>,
    pub sigma_e_mb: f64,
    pub sigma_r_mb: f64,
    pub sigma_t_mb: f64,
    pub s: f64,
    pub flag: String,
}

impl ScanRow {
    pub fn from_record(r: &EntropyRecord) -> Self {
        ScanRow {
            projectile: r.projectile,
            target: Target { z: r.nucleus.z, n: r.nucleus.n },
            t: r.t,
            k: r.k,
            lmax: Some(r.l_max_used),
            sigma_e_mb: r.sigma_e * FM2_TO_MB,
            sigma_r_mb: r.sigma_r * FM2_TO_MB,
            sigma_t_mb: r.sigma_t * FM2_TO_MB,
            s: r.s,
            flag: FLAG_OK.into(),
        }
    }

    pub fn failed(projectile: Projectile, target: Target, t: f64, reason: &str) -> Self {
        ScanRow {
            projectile,
            target,
            t,
            k: f64::NAN,
            lmax: None,
            sigma_e_mb: f64::NAN,
            sigma_r_mb: f64::NAN,
            sigma_t_mb: f64::NAN,
            s: f64::NAN,
            flag: format!("error: {reason}"),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.flag == FLAG_OK
    }

    /// Sort key (projectile, A, Z, T).
    pub fn key(&self) -> (&'static str, u32, u32, f64) {
        (self.projectile.tag(), self.target.a(), self.target.z, self.t)
    }

    /// The row as stored: numbers at 12 significant digits.
    pub fn rounded(&self) -> Self {
        ScanRow {
            t: round_sig(self.t),
            k: round_sig(self.k),
            sigma_e_mb: round_sig(self.sigma_e_mb),
            sigma_r_mb: round_sig(self.sigma_r_mb),
            sigma_t_mb: round_sig(self.sigma_t_mb),
            s: round_sig(self.s),
            ..self.clone()
        }
    }
}

pub fn sort_rows(rows: &mut [ScanRow]) {
    rows.sort_by(|x, y| {
        let (a, b) = (x.key(), y.key());
        a.0.cmp(b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)).then(a.3.total_cmp(&b.3))
    });
}

#[derive(Debug, Serialize, Deserialize)]
#[allow(non_snake_case)]
struct CsvRow {
    projectile: String,
    Z: u32,
    N: u32,
    A: u32,
    T_MeV: f64,
    k_invfm: f64,
    lmax: Option<u32>,
    sigma_e_mb: f64,
    sigma_r_mb: f64,
    sigma_t_mb: f64,
    S_nats: f64,
    flag: String,
}

impl From<&ScanRow> for CsvRow {
    fn from(r: &ScanRow) -> Self {
        let r = r.rounded();
        CsvRow {
            projectile: r.projectile.tag().into(),
            Z: r.target.z,
            N: r.target.n,
            A: r.target.a(),
            T_MeV: r.t,
            k_invfm: r.k,
            lmax: r.lmax,
            sigma_e_mb: r.sigma_e_mb,
            sigma_r_mb: r.sigma_r_mb,
            sigma_t_mb: r.sigma_t_mb,
            S_nats: r.s,
            flag: r.flag,
        }
    }
}

impl TryFrom<CsvRow> for ScanRow {
    type Error = AppError;

    fn try_from(r: CsvRow) -> Result<Self> {
        if r.A != r.Z + r.N {
            return Err(AppError::Usage(format!("row with A = {} != Z + N = {}", r.A, r.Z + r.N)));
        }
        Ok(ScanRow {
            projectile: parse_projectile(&r.projectile)?,
            target: Target { z: r.Z, n: r.N },
            t: r.T_MeV,
            k: r.k_invfm,
            lmax: r.lmax,
            sigma_e_mb: r.sigma_e_mb,
            sigma_r_mb: r.sigma_r_mb,
            sigma_t_mb: r.sigma_t_mb,
            s: r.S_nats,
            flag: r.flag,
        })
    }
}

pub fn write_rows<W: Write>(out: W, rows: &[ScanRow]) -> std::result::Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.serialize(CsvRow::from(r))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<ScanRow>> {
    let csv_err = |e| AppError::Csv { path: "<input>".into(), source: e };
    let mut rd = csv::Reader::from_reader(input);
    let header = rd.headers().map_err(csv_err)?.clone();
    if header.iter().ne(HEADER) {
        return Err(AppError::Usage(format!("unexpected CSV header: {}", header.iter().collect::<Vec<_>>().join(","))));
    }
    rd.deserialize::<CsvRow>().map(|r| r.map_err(csv_err).and_then(ScanRow::try_from)).collect()
}

pub fn write_file(path: &Path, rows: &[ScanRow]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| AppError::io(dir, e))?;
    }
    let file = std::fs::File::create(path).map_err(|e| AppError::io(path, e))?;
    write_rows(std::io::BufWriter::new(file), rows).map_err(|e| AppError::Csv { path: path.into(), source: e })
}

pub fn read_file(path: &Path) -> Result<Vec<ScanRow>> {
    let file = std::fs::File::open(path).map_err(|e| AppError::io(path, e))?;
    read_rows(std::io::BufReader::new(file)).map_err(|e| match e {
        AppError::Csv { source, .. } => AppError::Csv { path: path.into(), source },
        other => other,
    })
}
