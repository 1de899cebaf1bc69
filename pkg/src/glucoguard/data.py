"""Dataset schemas, tabular loading, and the admissions-style relational build.

Loaders are reentrant and own their outputs; there are no module-level
caches.  The on-disk format is comma-separated text with a header row;
serialization round-trips exactly (floats are written with repr precision).
"""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DomainError, LoadError

__all__ = [
    "FeatureSpec",
    "DatasetSchema",
    "Dataset",
    "MimicTables",
    "MimicBuildReport",
    "PIMA_SCHEMA",
    "SYLHET_SCHEMA",
    "COHORT_SCHEMA",
    "EXCLUDED_ETHNICITIES",
    "load_tabular_dataset",
    "write_tabular_dataset",
    "build_mimic_like_dataset",
    "load_mimic_tables",
    "write_mimic_tables",
]

NUMERIC = "numeric"
BINARY = "binary"
CATEGORICAL = "categorical"

# Ethnicity responses treated as missing; rows carrying them are removed
# during the cohort build.
EXCLUDED_ETHNICITIES = frozenset(
    {"UNKNOWN/NOT SPECIFIED", "PATIENT DECLINED TO ANSWER", "UNABLE TO OBTAIN"}
)

# ICD9 prefix covering the diabetes mellitus code family (250.xx), and the
# family-history-of-diabetes V-code.
DIABETES_ICD9_PREFIX = "250"
FAMILY_HISTORY_ICD9 = "V180"


@dataclass(frozen=True)
class FeatureSpec:
    """One feature column: its name, kind, and zero-as-missing flag."""

    name: str
    kind: str = NUMERIC
    zero_is_missing: bool = False

    def __post_init__(self):
        if self.kind not in (NUMERIC, BINARY, CATEGORICAL):
            raise DomainError(f"unknown feature kind {self.kind!r} for {self.name!r}")
        if self.zero_is_missing and self.kind != NUMERIC:
            raise DomainError(f"zero_is_missing only applies to numeric features ({self.name!r})")


@dataclass(frozen=True)
class DatasetSchema:
    """Ordered feature declarations plus the label column contract."""

    features: tuple[FeatureSpec, ...]
    label_name: str
    positive_label: str

    def __post_init__(self):
        names = [f.name for f in self.features]
        if len(set(names)) != len(names):
            raise DomainError("feature names must be unique")
        if self.label_name in names:
            raise DomainError("label column cannot also be a feature")

    @property
    def feature_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.features)

    @property
    def columns(self) -> tuple[str, ...]:
        return self.feature_names + (self.label_name,)

    def feature(self, name: str) -> FeatureSpec:
        for f in self.features:
            if f.name == name:
                return f
        raise DomainError(f"no feature named {name!r}")


@dataclass(frozen=True)
class Dataset:
    """Loaded rows conforming to a schema.

    Each row maps column name to a parsed value: float for numeric columns,
    str for binary/categorical columns and for the label.
    """

    schema: DatasetSchema
    rows: tuple[dict, ...]

    def __post_init__(self):
        if len(self.rows) < 1:
            raise LoadError("dataset must contain at least one row")
        labels = {row[self.schema.label_name] for row in self.rows}
        if len(labels) > 2:
            raise LoadError(f"more than two label values present: {sorted(labels)}")
        if len(labels) == 2 and self.schema.positive_label not in labels:
            raise LoadError(
                f"positive label {self.schema.positive_label!r} absent from {sorted(labels)}"
            )

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def labels(self) -> list[str]:
        return [row[self.schema.label_name] for row in self.rows]

    def class_counts(self) -> tuple[int, int]:
        """(positive, negative) row counts."""
        pos = sum(1 for v in self.labels() if v == self.schema.positive_label)
        return pos, len(self.rows) - pos


def _parse_cell(raw: str, spec: FeatureSpec, row_number: int, path: str) -> float | str:
    if spec.kind == NUMERIC:
        try:
            return float(raw)
        except ValueError:
            raise LoadError(
                f"{path}: row {row_number}, column {spec.name!r}: "
                f"cannot parse {raw!r} as a number"
            ) from None
    return raw.strip()


def load_tabular_dataset(path: str | Path, schema: DatasetSchema) -> Dataset:
    """Load a comma-separated file into a Dataset.

    The header must match the schema's column order exactly.  No rows are
    dropped at this stage; parse failures name the offending row and column.
    """
    path = Path(path)
    if not path.exists():
        raise LoadError(f"dataset file not found: {path}")
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise LoadError(f"{path}: file is empty") from None
        expected = list(schema.columns)
        if [h.strip() for h in header] != expected:
            raise LoadError(
                f"{path}: header mismatch; expected {expected}, got {header}"
            )
        rows: list[dict] = []
        for line_no, record in enumerate(reader, start=2):
            if not record:
                continue
            if len(record) != len(expected):
                raise LoadError(
                    f"{path}: row {line_no} has {len(record)} cells, expected {len(expected)}"
                )
            row: dict = {}
            for spec, raw in zip(schema.features, record):
                row[spec.name] = _parse_cell(raw, spec, line_no, str(path))
            row[schema.label_name] = record[-1].strip()
            rows.append(row)
    if not rows:
        raise LoadError(f"{path}: no data rows")
    return Dataset(schema=schema, rows=tuple(rows))


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_tabular_dataset(dataset: Dataset, path: str | Path) -> None:
    """Serialize a Dataset; loading the file back reproduces it exactly."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(dataset.schema.columns)
        for row in dataset.rows:
            writer.writerow([_format_cell(row[c]) for c in dataset.schema.columns])


# Public-dataset schemas.  PIMA marks the three sentinel-zero columns the
# preprocessing stage filters on; the Sylhet questionnaire is one numeric
# age column plus yes/no symptom columns and a gender column.
PIMA_SCHEMA = DatasetSchema(
    features=(
        FeatureSpec("Pregnancies"),
        FeatureSpec("Glucose"),
        FeatureSpec("BloodPressure", zero_is_missing=True),
        FeatureSpec("SkinThickness", zero_is_missing=True),
        FeatureSpec("Insulin"),
        FeatureSpec("BMI", zero_is_missing=True),
        FeatureSpec("DiabetesPedigreeFunction"),
        FeatureSpec("Age"),
    ),
    label_name="Outcome",
    positive_label="1",
)

SYLHET_SCHEMA = DatasetSchema(
    features=(
        FeatureSpec("Age"),
        FeatureSpec("Gender", kind=BINARY),
        FeatureSpec("Polyuria", kind=BINARY),
        FeatureSpec("Polydipsia", kind=BINARY),
        FeatureSpec("sudden weight loss", kind=BINARY),
        FeatureSpec("weakness", kind=BINARY),
        FeatureSpec("Polyphagia", kind=BINARY),
        FeatureSpec("Genital thrush", kind=BINARY),
        FeatureSpec("visual blurring", kind=BINARY),
        FeatureSpec("Itching", kind=BINARY),
        FeatureSpec("Irritability", kind=BINARY),
        FeatureSpec("delayed healing", kind=BINARY),
        FeatureSpec("partial paresis", kind=BINARY),
        FeatureSpec("muscle stiffness", kind=BINARY),
        FeatureSpec("Alopecia", kind=BINARY),
        FeatureSpec("Obesity", kind=BINARY),
    ),
    label_name="class",
    positive_label="Positive",
)

# Shape of the dataset produced by the relational cohort build.
COHORT_SCHEMA = DatasetSchema(
    features=(
        FeatureSpec("Age"),
        FeatureSpec("Gender", kind=BINARY),
        FeatureSpec("Ethnicity", kind=CATEGORICAL),
        FeatureSpec("FamilyHistory", kind=BINARY),
    ),
    label_name="Diabetic",
    positive_label="Positive",
)


@dataclass(frozen=True)
class MimicTables:
    """The four admissions-style relational tables the cohort build joins.

    patients:   (subject_id, gender, dob ISO date)
    admissions: (subject_id, admit_time ISO date, ethnicity)
    diagnoses:  (subject_id, icd9_code)
    icd_dictionary: (icd9_code, description)
    """

    patients: tuple[tuple[str, str, str], ...]
    admissions: tuple[tuple[str, str, str], ...]
    diagnoses: tuple[tuple[str, str], ...]
    icd_dictionary: tuple[tuple[str, str], ...]


@dataclass
class MimicBuildReport:
    """Row accounting for one cohort build."""

    patients_total: int = 0
    skipped_no_admission: int = 0
    excluded_ethnicity: int = 0
    rows_emitted: int = 0


def _parse_date(text: str, context: str) -> dt.date:
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        raise LoadError(f"{context}: cannot parse date {text!r}") from None


def _whole_years_between(dob: dt.date, later: dt.date) -> int:
    years = later.year - dob.year
    if (later.month, later.day) < (dob.month, dob.day):
        years -= 1
    return years


def build_mimic_like_dataset(tables: MimicTables) -> tuple[Dataset, MimicBuildReport]:
    """Join the four tables into one row per patient.

    Age is whole years between date of birth and the first admission;
    the label is positive iff any associated ICD9 code is in the diabetes
    mellitus family (250.xx); family history is the presence of code V180.
    Patients without an admission are skipped and counted; rows whose
    ethnicity is one of the missing-value responses are removed.
    """
    report = MimicBuildReport(patients_total=len(tables.patients))

    first_admission: dict[str, tuple[dt.date, str]] = {}
    for subject_id, admit_time, ethnicity in tables.admissions:
        admit = _parse_date(admit_time, f"admission for {subject_id}")
        known = first_admission.get(subject_id)
        if known is None or admit < known[0]:
            first_admission[subject_id] = (admit, ethnicity)

    codes_by_subject: dict[str, set[str]] = {}
    for subject_id, icd9_code in tables.diagnoses:
        codes_by_subject.setdefault(subject_id, set()).add(icd9_code.strip())

    rows: list[dict] = []
    for subject_id, gender, dob_text in tables.patients:
        admission = first_admission.get(subject_id)
        if admission is None:
            report.skipped_no_admission += 1
            continue
        admit_date, ethnicity = admission
        if ethnicity in EXCLUDED_ETHNICITIES:
            report.excluded_ethnicity += 1
            continue
        dob = _parse_date(dob_text, f"patient {subject_id}")
        codes = codes_by_subject.get(subject_id, set())
        diabetic = any(code.startswith(DIABETES_ICD9_PREFIX) for code in codes)
        family_history = FAMILY_HISTORY_ICD9 in codes
        rows.append(
            {
                "Age": float(_whole_years_between(dob, admit_date)),
                "Gender": gender,
                "Ethnicity": ethnicity,
                "FamilyHistory": "Yes" if family_history else "No",
                "Diabetic": "Positive" if diabetic else "Negative",
            }
        )
    if not rows:
        raise LoadError("cohort build produced no rows")
    report.rows_emitted = len(rows)
    return Dataset(schema=COHORT_SCHEMA, rows=tuple(rows)), report


_MIMIC_FILES = {
    "patients": ("subject_id", "gender", "dob"),
    "admissions": ("subject_id", "admit_time", "ethnicity"),
    "diagnoses": ("subject_id", "icd9_code"),
    "icd_dictionary": ("icd9_code", "description"),
}


def write_mimic_tables(tables: MimicTables, directory: str | Path) -> dict[str, Path]:
    """Write the four tables as CSV files into a directory; returns the paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths: dict[str, Path] = {}
    for name, header in _MIMIC_FILES.items():
        path = directory / f"{name}.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for record in getattr(tables, name):
                writer.writerow(record)
        paths[name] = path
    return paths


def load_mimic_tables(directory: str | Path) -> MimicTables:
    """Load the four-table directory written by write_mimic_tables."""
    directory = Path(directory)
    loaded: dict[str, tuple] = {}
    for name, header in _MIMIC_FILES.items():
        path = directory / f"{name}.csv"
        if not path.exists():
            raise LoadError(f"missing table file: {path}")
        with path.open(newline="") as fh:
            reader = csv.reader(fh)
            try:
                found = next(reader)
            except StopIteration:
                raise LoadError(f"{path}: file is empty") from None
            if [h.strip() for h in found] != list(header):
                raise LoadError(f"{path}: header mismatch; expected {list(header)}")
            loaded[name] = tuple(tuple(cell.strip() for cell in rec) for rec in reader if rec)
    return MimicTables(**loaded)
