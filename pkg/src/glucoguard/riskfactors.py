"""Clinical risk-factor semantics: thresholds, class labeling, device catalog.

All rules are pure functions over immutable inputs; there is no shared
mutable state, so concurrent callers are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum, IntEnum

from .errors import DomainError

__all__ = [
    "GlycemicStatus",
    "RiskFactor",
    "RiskFactorProfile",
    "SelfReported",
    "RiskFlags",
    "DeviceCatalogEntry",
    "classify_glucose",
    "assess_risk_flags",
    "device_catalog_lookup",
    "catalog_table",
]

# Fasting plasma glucose cut points, mg/dl.  The labeling rule keeps 125
# itself in the pre-diabetic band; only strictly greater values are diabetic.
FPG_NORMAL_BELOW = 100.0
FPG_DIABETIC_ABOVE = 125.0

SYSTOLIC_HYPERTENSIVE = 140.0   # mmHg, both pressures must be elevated
DIASTOLIC_HYPERTENSIVE = 90.0   # mmHg
URIC_ACID_ELEVATED = 370.0      # µmol/l, strictly greater is at risk
SLEEP_HEALTHY_MIN = 6.0         # hours/night, inclusive band [6, 8]
SLEEP_HEALTHY_MAX = 8.0
BDI_DEPRESSED = 11.0            # score >= 11
CESD_DEPRESSED = 8.0            # score >= 8
SDS_DEPRESSED = 39.0            # score > 39
ACTIVE_SESSIONS_PER_WEEK = 3    # at least 3 sessions/week ...
ACTIVE_MINUTES_PER_SESSION = 30.0  # ... of at least 30 minutes each
BMI_OBESE = 30.0                # WHO cutoff; kg/m²


class GlycemicStatus(IntEnum):
    """Fasting-glucose class label; ordering reflects increasing risk."""

    NON_DIABETIC = 0
    PRE_DIABETIC = 1
    DIABETIC = 2


class RiskFactor(Enum):
    """The eight measurable risk factors with monitoring devices or scales."""

    HYPERTENSION = "hypertension"
    OBESITY = "obesity"
    CHOLESTEROL = "cholesterol"
    DEPRESSION = "depression"
    SERUM_URIC_ACID = "serum_uric_acid"
    SLEEP_DURATION = "sleep_duration"
    PHYSICAL_ACTIVITY = "physical_activity"
    GLUCOSE = "glucose"


@dataclass(frozen=True)
class SelfReported:
    """Self-reported attributes collected on registration or hospital visits."""

    age: float = 0.0
    gender: str = ""
    ethnicity: str = ""
    family_history: bool = False
    smoking: bool = False
    alcohol: bool = False

    def __post_init__(self):
        if self.age < 0:
            raise DomainError(f"age must be >= 0, got {self.age}")


@dataclass(frozen=True)
class RiskFactorProfile:
    """One user's measured and self-reported risk-factor values.

    Physical quantities must be non-negative and sleep duration cannot
    exceed 24 h/night; depression scores are optional (absent scales simply
    never trigger the depressed flag).
    """

    fasting_glucose: float = 0.0        # mg/dl
    systolic_bp: float = 0.0            # mmHg
    diastolic_bp: float = 0.0           # mmHg
    bmi: float = 0.0                    # kg/m²
    serum_uric_acid: float = 0.0        # µmol/l
    sleep_duration: float = 0.0         # hours/night
    exercise_sessions_per_week: int = 0
    exercise_minutes_per_session: float = 0.0
    bdi_score: float | None = None
    cesd_score: float | None = None
    sds_score: float | None = None
    self_reported: SelfReported = field(default_factory=SelfReported)

    def __post_init__(self):
        for name in (
            "fasting_glucose",
            "systolic_bp",
            "diastolic_bp",
            "bmi",
            "serum_uric_acid",
            "sleep_duration",
            "exercise_minutes_per_session",
        ):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise DomainError(f"{name} must be finite and non-negative, got {value}")
        if self.exercise_sessions_per_week < 0:
            raise DomainError("exercise_sessions_per_week must be >= 0")
        if self.sleep_duration > 24:
            raise DomainError(f"sleep_duration cannot exceed 24 h, got {self.sleep_duration}")


@dataclass(frozen=True)
class RiskFlags:
    """Boolean per-factor risk indicators derived from a profile."""

    hypertensive: bool
    obese: bool
    hyperuricemic: bool
    abnormal_sleep: bool
    depressed: bool
    physically_inactive: bool


@dataclass(frozen=True)
class DeviceCatalogEntry:
    """One row of the monitoring-device comparison catalog."""

    risk_factor: RiskFactor
    device_name: str
    performance_note: str
    approx_cost_usd: float | None = None

    def __post_init__(self):
        if self.approx_cost_usd is not None and self.approx_cost_usd < 0:
            raise DomainError("device cost cannot be negative")


def classify_glucose(fpg: float) -> GlycemicStatus:
    """Label a fasting plasma glucose value (mg/dl).

    Below 100 is non-diabetic, 100-125 inclusive is pre-diabetic, and
    strictly above 125 is diabetic.  Raises DomainError for non-positive
    or non-finite input.
    """
    if not isinstance(fpg, (int, float)) or isinstance(fpg, bool):
        raise DomainError(f"fasting glucose must be a number, got {type(fpg).__name__}")
    if not math.isfinite(fpg) or fpg <= 0:
        raise DomainError(f"fasting glucose must be finite and positive, got {fpg}")
    if fpg < FPG_NORMAL_BELOW:
        return GlycemicStatus.NON_DIABETIC
    if fpg <= FPG_DIABETIC_ABOVE:
        return GlycemicStatus.PRE_DIABETIC
    return GlycemicStatus.DIABETIC


def assess_risk_flags(profile: RiskFactorProfile) -> RiskFlags:
    """Derive the per-factor risk flags from a profile.

    Hypertension requires both pressures elevated.  A missing depression
    score never triggers the depressed flag.  Physical activity is judged
    against the 3+ sessions/week of 30+ minutes band; anything less is
    flagged inactive.
    """
    depressed = (
        (profile.bdi_score is not None and profile.bdi_score >= BDI_DEPRESSED)
        or (profile.cesd_score is not None and profile.cesd_score >= CESD_DEPRESSED)
        or (profile.sds_score is not None and profile.sds_score > SDS_DEPRESSED)
    )
    active = (
        profile.exercise_sessions_per_week >= ACTIVE_SESSIONS_PER_WEEK
        and profile.exercise_minutes_per_session >= ACTIVE_MINUTES_PER_SESSION
    )
    return RiskFlags(
        hypertensive=(
            profile.systolic_bp >= SYSTOLIC_HYPERTENSIVE
            and profile.diastolic_bp >= DIASTOLIC_HYPERTENSIVE
        ),
        obese=profile.bmi >= BMI_OBESE,
        hyperuricemic=profile.serum_uric_acid > URIC_ACID_ELEVATED,
        abnormal_sleep=(
            profile.sleep_duration < SLEEP_HEALTHY_MIN
            or profile.sleep_duration > SLEEP_HEALTHY_MAX
        ),
        depressed=depressed,
        physically_inactive=not active,
    )


def _entry(factor: RiskFactor, name: str, note: str, cost: float | None) -> DeviceCatalogEntry:
    return DeviceCatalogEntry(factor, name, note, cost)


# Static monitoring-device catalog.  Entries and ordering follow the
# published comparison tables; a cost range collapses to its lower bound
# with the full range kept in the note, and unavailable or obsolete
# pricing is recorded as None.  Depression is assessed with clinical
# rating scales rather than devices, so it has no catalog rows.
_CATALOG: dict[RiskFactor, tuple[DeviceCatalogEntry, ...]] = {
    RiskFactor.HYPERTENSION: (
        _entry(
            RiskFactor.HYPERTENSION,
            "Omron Evolv (HEM-7600T-E)",
            "Mean difference vs. mercury sphygmomanometer: -0.1 ± 5.0 mmHg systolic, "
            "-0.2 ± 4.1 mmHg diastolic",
            136.0,
        ),
        _entry(
            RiskFactor.HYPERTENSION,
            "Omron M3 Comfort (HEM-7134-E)",
            "Mean difference vs. mercury sphygmomanometer: -0.9 ± 5.4 mmHg systolic, "
            "-0.6 ± 4.7 mmHg diastolic",
            63.16,
        ),
        _entry(
            RiskFactor.HYPERTENSION,
            "Omron (HEM-9210T)",
            "Mean difference vs. mercury sphygmomanometer: -2.1 ± 4.7 mmHg systolic, "
            "-1.2 ± 4.1 mmHg diastolic",
            None,
        ),
        _entry(
            RiskFactor.HYPERTENSION,
            "Mobil-O-Graph",
            "Mean difference vs. mercury sphygmomanometer: -2.2 ± 7.3 mmHg systolic, "
            "-0.4 ± 6.1 mmHg diastolic",
            1365.86,
        ),
    ),
    RiskFactor.OBESITY: (
        _entry(
            RiskFactor.OBESITY,
            "Statistical BMI calculation",
            "Quick, cost-effective, easy; not accurate for elderly, muscular, or "
            "pregnant individuals",
            None,
        ),
        _entry(
            RiskFactor.OBESITY,
            "Skinfold calipers",
            "Easy to use, portable, cost-effective; accuracy depends on operator skill",
            None,
        ),
        _entry(
            RiskFactor.OBESITY,
            "Smart weighing scales",
            "Quick and easy; reliability depends on subject condition (hydration); "
            "accurate scales are costly",
            None,
        ),
        _entry(
            RiskFactor.OBESITY,
            "Hydrodensitometry",
            "Accurate and reliable; costly and unsuitable for children and elderly "
            "(repeated 5-7 s submersion)",
            None,
        ),
        _entry(
            RiskFactor.OBESITY,
            "Air displacement plethysmography",
            "Quick, accurate, reliable, suitable for any age; costly",
            None,
        ),
        _entry(
            RiskFactor.OBESITY,
            "Dual energy x-ray absorptiometry",
            "Quick, precise, reliable; costly",
            None,
        ),
    ),
    RiskFactor.CHOLESTEROL: (
        _entry(RiskFactor.CHOLESTEROL, "EasyTouch", "Coefficient of variation not reported", 60.0),
        _entry(RiskFactor.CHOLESTEROL, "BeneCheck Plus", "Coefficient of variation not reported", 136.0),
    ),
    RiskFactor.DEPRESSION: (),
    RiskFactor.SERUM_URIC_ACID: (
        _entry(
            RiskFactor.SERUM_URIC_ACID,
            "Smartphone as electro-chemical analyzer",
            "CV: 4.1% low, 2.47% mid, 1.87% high concentration (average)",
            None,
        ),
        _entry(RiskFactor.SERUM_URIC_ACID, "EasyTouch", "CV 27.2% (not acceptable per CAP)", 60.0),
        _entry(RiskFactor.SERUM_URIC_ACID, "UAsure", "CV 25.9% (not acceptable per CAP)", 64.0),
        _entry(RiskFactor.SERUM_URIC_ACID, "BeneCheck Plus", "CV 9.5% (acceptable per CAP)", 136.0),
        _entry(RiskFactor.SERUM_URIC_ACID, "HumaSens plus", "CV 11.5% (acceptable per CAP)", 52.0),
        _entry(
            RiskFactor.SERUM_URIC_ACID,
            "Liquid chromatography mass spectrometry",
            "CV 0.01-3.37% (average)",
            None,
        ),
    ),
    RiskFactor.SLEEP_DURATION: (
        _entry(
            RiskFactor.SLEEP_DURATION,
            "Polysomnography test",
            "Non-invasive; sensitivity 0.957, specificity 0.532, accuracy 0.904, "
            "Cohen's kappa 0.495 (averages); cost 943-2798 USD",
            943.0,
        ),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "OURA ring",
            "Wearable; sensitivity to detect sleep 96%, specificity to detect wake 48%; "
            "cost 299-399 USD",
            299.0,
        ),
        _entry(RiskFactor.SLEEP_DURATION, "Fitbit Flex", "Wearable; 97.46% accuracy", 100.0),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "Fitbit Charge HR",
            "Wearable; overestimates the sleep duration",
            65.39,
        ),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "Polar A370 fitness tracker",
            "Wearable; age 11±0.8: sens 0.93, spec 0.77, acc 0.91; age 17.8±1.8: "
            "sens 0.91, spec 0.83, acc 0.90",
            163.0,
        ),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "Actiwatch 2",
            "Wearable; age 11±0.8: sens 0.93, spec 0.68, acc 0.90; age 17.8±1.8: "
            "sens 0.93, spec 0.58, acc 0.89",
            None,
        ),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "Fitbit Alta HR",
            "Wearable; all sleep: sens 0.96 ± 0.02, spec 0.58 ± 0.16, acc 0.90 ± 0.04",
            270.0,
        ),
        _entry(RiskFactor.SLEEP_DURATION, "Withings Pulse", "Wearable; 98.1% accuracy", 100.0),
        _entry(RiskFactor.SLEEP_DURATION, "Misfit Shine", "Wearable; 96% accuracy", 100.0),
        _entry(RiskFactor.SLEEP_DURATION, "Jawbone Up24", "Wearable; 97.23% accuracy", 100.0),
        _entry(
            RiskFactor.SLEEP_DURATION,
            "EMFIT Quantified Sleep",
            "Non-wearable; overestimates total sleep time, underestimates wake after sleep",
            None,
        ),
        _entry(RiskFactor.SLEEP_DURATION, "Sleep Cycle", "Mobile application; not reported; free", 0.0),
    ),
    RiskFactor.PHYSICAL_ACTIVITY: (
        _entry(RiskFactor.PHYSICAL_ACTIVITY, "Fitbit One", "Waist-based; accuracy >90%", 70.0),
        _entry(RiskFactor.PHYSICAL_ACTIVITY, "Omron HJ-321", "Waist-based; accuracy >90%", 67.25),
        _entry(RiskFactor.PHYSICAL_ACTIVITY, "Sportline 340 Strider", "Waist-based; accuracy >90%", 22.0),
        _entry(RiskFactor.PHYSICAL_ACTIVITY, "Fitbit Force", "Wrist-based; accuracy <90%", None),
        _entry(
            RiskFactor.PHYSICAL_ACTIVITY,
            "StepWatch activity monitor",
            "Ankle-based; non-running activities >95%, running activities 74.4%",
            None,
        ),
        _entry(
            RiskFactor.PHYSICAL_ACTIVITY,
            "Apple iPhone 5",
            "Mobile phone; accuracy <90%; obsolete",
            None,
        ),
        _entry(RiskFactor.PHYSICAL_ACTIVITY, "Samsung Galaxy S4", "Mobile phone; accuracy <90%", 405.0),
    ),
    RiskFactor.GLUCOSE: (
        _entry(
            RiskFactor.GLUCOSE,
            "Wearable-band type visible-near infrared optical",
            "Non-invasive; average correlation actual vs. measured glucose 0.86",
            None,
        ),
        _entry(
            RiskFactor.GLUCOSE,
            "Triple-pole complementary split ring resonator-based microwave bio-sensor",
            "Non-invasive; sensitivity 6.2 dB/(mg/ml)",
            None,
        ),
        _entry(RiskFactor.GLUCOSE, "EasyTouch", "Invasive; performance not reported", 60.0),
        _entry(RiskFactor.GLUCOSE, "BeneCheck Plus", "Invasive; performance not reported", 136.0),
    ),
}


def device_catalog_lookup(factor: RiskFactor | str) -> list[DeviceCatalogEntry]:
    """Return the catalog rows for one risk factor, in published order.

    Accepts either a RiskFactor or its string value.  Depression yields an
    empty list (assessed by rating scales, not devices).  Unknown factors
    raise DomainError.
    """
    if isinstance(factor, str):
        try:
            factor = RiskFactor(factor)
        except ValueError:
            raise DomainError(f"unknown risk factor: {factor!r}") from None
    if not isinstance(factor, RiskFactor):
        raise DomainError(f"unknown risk factor: {factor!r}")
    return list(_CATALOG[factor])


def catalog_table(delimiter: str = "\t") -> str:
    """Render the full catalog as delimiter-separated text (factor, device, cost)."""
    lines = [delimiter.join(("risk_factor", "device", "approx_cost_usd"))]
    for factor in RiskFactor:
        for entry in _CATALOG[factor]:
            cost = "" if entry.approx_cost_usd is None else f"{entry.approx_cost_usd:g}"
            lines.append(delimiter.join((factor.value, entry.device_name, cost)))
    return "\n".join(lines) + "\n"
