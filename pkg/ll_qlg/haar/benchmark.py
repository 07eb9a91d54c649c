# Copyright (C) 2026 ll-qlg contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.

# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


import concurrent.futures
import logging
import math
import traceback
import typing

import numpy
import scipy.stats

from ll_qlg.constants import CALIBRATED_LAMBDA
from ll_qlg.fock.fidelity import fidelity_state
from ll_qlg.fock.fock_space import FockSpace
from ll_qlg.fock.states import vacuum
from ll_qlg.haar.sampling import HAAR_PADDING, fidelity_cdf, fidelity_pdf, sample_haar_state
from ll_qlg.ncft.ncft_kernel_table import build_kernel_table
from ll_qlg.preparation import prepare_state
from ll_qlg.qlg.floquet_correction import FLOQUET_CORRECTIONS
from ll_qlg.simulation_error import SimulationError
from ll_qlg.typed import RealArray, IntArray, JsonDict, frozen_array, parallel_map

__all__ = ("HaarBenchmarkReport", "DepthScan", "benchmark", "depth_scan")


class HaarBenchmarkReport:
    """Statistics of Haar-target preparation over ``samples`` successful runs.

    ``fidelities_to_ref`` hold F = |<psi_QLG|psi_ref>|^2, ``prep_fidelities``
    hold F_QLG = |<psi_QLG|psi_Haar>|^2.
    """

    __slots__ = (
        "d",
        "n_t",
        "n_k",
        "k_f",
        "dim",
        "seed",
        "failures",
        "fidelities_to_ref",
        "prep_fidelities",
        "bin_edges",
        "counts",
        "ks_statistic",
        "ks_pvalue",
    )

    DEFAULT_BINS: typing.Final = 20

    d: int
    n_t: int
    n_k: int
    k_f: float
    dim: int
    seed: int
    failures: int
    fidelities_to_ref: RealArray
    prep_fidelities: RealArray
    bin_edges: RealArray
    counts: IntArray
    ks_statistic: float
    ks_pvalue: float

    def __init__(
            self,
            *,
            d: int,
            n_t: int,
            n_k: int,
            k_f: float,
            dim: int,
            seed: int,
            failures: int,
            fidelities_to_ref: RealArray,
            prep_fidelities: RealArray,
            bins: int = DEFAULT_BINS
    ):
        fidelities_to_ref = numpy.clip(numpy.asarray(fidelities_to_ref, dtype=numpy.float64), 0.0, 1.0)
        prep_fidelities = numpy.clip(numpy.asarray(prep_fidelities, dtype=numpy.float64), 0.0, 1.0)

        if fidelities_to_ref.shape != prep_fidelities.shape:
            raise ValueError("Fidelity arrays must have one entry per sample")

        counts, edges = numpy.histogram(fidelities_to_ref, bins=bins, range=(0.0, 1.0))

        if fidelities_to_ref.size > 0:
            ks = scipy.stats.kstest(fidelities_to_ref, lambda values: fidelity_cdf(values, d))
            ks_statistic, ks_pvalue = float(ks.statistic), float(ks.pvalue)
        else:
            ks_statistic, ks_pvalue = math.nan, math.nan

        self.d = int(d)
        self.n_t = int(n_t)
        self.n_k = int(n_k)
        self.k_f = float(k_f)
        self.dim = int(dim)
        self.seed = int(seed)
        self.failures = int(failures)
        self.fidelities_to_ref = frozen_array(fidelities_to_ref)
        self.prep_fidelities = frozen_array(prep_fidelities)
        self.bin_edges = frozen_array(edges)
        self.counts = frozen_array(counts.astype(numpy.int64))
        self.ks_statistic = ks_statistic
        self.ks_pvalue = ks_pvalue

    @property
    def samples(self) -> int:
        return int(self.prep_fidelities.size)

    @property
    def mean_fidelity_to_ref(self) -> float:
        return float(numpy.mean(self.fidelities_to_ref)) if self.samples else math.nan

    @property
    def mean_prep_fidelity(self) -> float:
        return float(numpy.mean(self.prep_fidelities)) if self.samples else math.nan

    def histogram_csv_rows(self) -> list[list[str]]:
        rows = [["bin_low", "bin_high", "count", "density", "analytic_density"]]
        width = float(self.bin_edges[1] - self.bin_edges[0])

        for low, high, count in zip(self.bin_edges[:-1], self.bin_edges[1:], self.counts):
            density = count / (self.samples * width) if self.samples else 0.0
            center = 0.5 * (low + high)
            rows.append([repr(float(low)), repr(float(high)), str(int(count)), repr(float(density)), repr(float(fidelity_pdf(center, self.d)))])

        return rows

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "HaarBenchmarkReport",
            "d": self.d,
            "N_t": self.n_t,
            "N_k": self.n_k,
            "k_f": self.k_f,
            "dim": self.dim,
            "seed": self.seed,
            "samples": self.samples,
            "failures": self.failures,
            "mean_fidelity_to_ref": self.mean_fidelity_to_ref,
            "mean_prep_fidelity": self.mean_prep_fidelity,
            "ks_statistic": self.ks_statistic,
            "ks_pvalue": self.ks_pvalue,
            "pdf_histogram": {"bins": self.bin_edges.tolist(), "counts": self.counts.tolist()}
        }

    def __repr__(self) -> str:
        return f"HaarBenchmarkReport(d={self.d}, N_t={self.n_t}, samples={self.samples}, mean_prep_fidelity={self.mean_prep_fidelity!r})"


def benchmark(
        d: int,
        n_t: int,
        n_k: int,
        k_f: float,
        samples: int,
        seed: int,
        *,
        beta0: float = 1.0,
        lam: float = CALIBRATED_LAMBDA,
        corrections: int = FLOQUET_CORRECTIONS,
        bins: int = HaarBenchmarkReport.DEFAULT_BINS,
        executor: concurrent.futures.Executor | None = None
) -> HaarBenchmarkReport:
    """Prepare ``samples`` Haar targets from the vacuum.

    The reference state is stream index 0 of ``seed``, sample ``i`` is stream
    index ``i + 1``. Failing samples are logged and counted.
    """
    if samples < 1:
        raise ValueError(f"At least one sample is required, got {samples!r}")

    space = FockSpace(d + HAAR_PADDING, lam)
    psi0 = vacuum(space)
    reference = sample_haar_state(d, seed, index=0, space=space)
    table = build_kernel_table(space, float(k_f), int(n_k), int(n_t))

    def run(index: int) -> tuple[float, float] | None:
        target = sample_haar_state(d, seed, index=index, space=space)

        try:
            final = prepare_state(psi0, target, n_t=n_t, n_k=n_k, k_f=k_f, beta0=beta0, table=table, corrections=corrections).final_state
        except (SimulationError, ValueError):
            logging.warning("haar sample %d failed: %s", index, traceback.format_exc())
            return None

        return fidelity_state(final, target), fidelity_state(final, reference)

    outcomes = [outcome for outcome in parallel_map(executor, run, range(1, samples + 1)) if outcome is not None]

    report = HaarBenchmarkReport(
        d=d,
        n_t=n_t,
        n_k=n_k,
        k_f=k_f,
        dim=space.dim,
        seed=seed,
        failures=samples - len(outcomes),
        fidelities_to_ref=numpy.array([to_ref for _, to_ref in outcomes]),
        prep_fidelities=numpy.array([prep for prep, _ in outcomes]),
        bins=bins
    )

    logging.info("haar benchmark %s", report)
    return report


class DepthScan:
    """Mean preparation fidelity of ``d``-level Haar targets against the slice count."""

    __slots__ = ("d", "threshold", "depths", "mean_fidelities")

    d: int
    threshold: float
    depths: tuple[int, ...]
    mean_fidelities: tuple[float, ...]

    def __init__(self, d: int, threshold: float, depths: typing.Sequence[int], mean_fidelities: typing.Sequence[float]):
        self.d = d
        self.threshold = threshold
        self.depths = tuple(depths)
        self.mean_fidelities = tuple(mean_fidelities)

    @property
    def minimal_depth(self) -> int | None:
        return next((n_t for n_t, mean in zip(self.depths, self.mean_fidelities) if mean > self.threshold), None)

    def csv_rows(self) -> list[list[str]]:
        rows = [["d", "N_t", "mean_prep_fidelity", "above_threshold"]]
        rows.extend([str(self.d), str(n_t), repr(mean), str(mean > self.threshold).lower()] for n_t, mean in zip(self.depths, self.mean_fidelities))
        return rows

    def get_dict(self) -> JsonDict:
        return {
            "_cons": "DepthScan",
            "d": self.d,
            "threshold": self.threshold,
            "depths": list(self.depths),
            "mean_fidelities": list(self.mean_fidelities),
            "minimal_depth": self.minimal_depth
        }

    def __repr__(self) -> str:
        return f"DepthScan(d={self.d}, minimal_depth={self.minimal_depth!r})"


def depth_scan(
        d: int,
        depths: typing.Sequence[int],
        *,
        n_k: int,
        k_f: float,
        samples: int,
        seed: int,
        threshold: float = 0.95,
        beta0: float = 1.0,
        lam: float = CALIBRATED_LAMBDA,
        corrections: int = FLOQUET_CORRECTIONS,
        executor: concurrent.futures.Executor | None = None
) -> DepthScan:
    """Benchmark every depth in increasing order, stopping after the first above ``threshold``."""
    scanned: list[int] = []
    means: list[float] = []

    for n_t in sorted(set(depths)):
        report = benchmark(d, n_t, n_k, k_f, samples, seed, beta0=beta0, lam=lam, corrections=corrections, executor=executor)
        logging.info("d=%d N_t=%d mean F_QLG %s", d, n_t, report.mean_prep_fidelity)

        scanned.append(n_t)
        means.append(report.mean_prep_fidelity)

        if report.mean_prep_fidelity > threshold:
            break

    return DepthScan(d, threshold, scanned, means)
