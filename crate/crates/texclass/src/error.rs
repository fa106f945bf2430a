//! Error type shared across the crate.

use std::path::PathBuf;

/// Errors produced by dataset ingestion, transforms, model building,
/// training and reporting.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error in {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("label map {path} is missing required column `{column}`")]
    MissingCsvColumn { path: PathBuf, column: String },

    #[error("row {row}: unknown label `{value}` (expected fluid, good, dry or tearing)")]
    UnknownLabel { row: usize, value: String },

    #[error("row {row}: duplicate image id `{id}`")]
    DuplicateImageId { row: usize, id: String },

    #[error("missing image files: {}", .0.join(", "))]
    MissingImages(Vec<String>),

    #[error("failed to decode image {path}: {source}")]
    ImageDecode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("failed to encode image {path}: {source}")]
    ImageEncode {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("train fraction {0} is outside (0, 1]")]
    InvalidTrainFraction(f64),

    #[error("invalid synthetic image size {height}x{width} (both sides must be >= 16)")]
    InvalidSyntheticSize { height: u32, width: u32 },

    #[error("patch size {patch_size} does not fit a {height}x{width} image")]
    InvalidPatchSize {
        patch_size: u32,
        height: u32,
        width: u32,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown backbone `{0}` (only `resnet18` is available)")]
    UnknownBackbone(String),

    #[error("pretrained weights requested but not available at {path} (no fallback)")]
    PretrainedWeightsUnavailable { path: PathBuf },

    #[error("weights file {path} is missing tensors: {}", missing.join(", "))]
    MissingWeightTensors { path: PathBuf, missing: Vec<String> },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("batch has {actual:?} shape, expected (n, 3, {expected_h}, {expected_w})")]
    BatchShape {
        actual: Vec<usize>,
        expected_h: usize,
        expected_w: usize,
    },

    #[error("non-finite loss at epoch {epoch}, batch {batch}")]
    NonFiniteLoss { epoch: usize, batch: usize },

    #[error("predictions ({predictions}) and truths ({truths}) differ in length")]
    LengthMismatch { predictions: usize, truths: usize },

    #[error("confusion matrix is empty")]
    EmptyConfusion,

    #[error("run report has no epochs")]
    EmptyReport,

    #[error("tensor backend error: {0}")]
    Tensor(#[from] candle_core::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
