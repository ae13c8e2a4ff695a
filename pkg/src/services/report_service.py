"""Assemble report models from computed results."""

import logging
import time
from typing import Dict, List, Optional, Sequence

from src.catalogue import CatalogueEntry
from src.geometry import ProjArrangement
from src.models.schemas import (
    BandItem,
    BandsReport,
    BoundsReport,
    CatalogueItem,
    CatalogueListing,
    ChamberItem,
    ChambersReport,
    ConjectureItem,
    ConjectureReport,
    DivisorRow,
    LineRow,
    OracleReport,
    SpectrumReport,
)
from src.services.conjecture import ConjectureRow
from src.services.minimal_complex import LocalSystem, align_to_normalized, local_system_cohomology
from src.services.multinets import search_multinets
from src.services.resonant_bands import Band, check_order, nabla_kernel, standing_wave
from src.services.sharp_pairs import sharp_pairs, upper_bound
from src.services.spectrum_service import PreparedArrangement, SpectrumService, get_spectrum_service
from src.services.vanishing import vanishing_report

logger = logging.getLogger(__name__)


class ReportService:
    """Build the reports printed by each subcommand."""

    def __init__(self, service: Optional[SpectrumService] = None):
        self.service = service or get_spectrum_service()

    @staticmethod
    def _source_lines(prepared: PreparedArrangement) -> List[int]:
        return list(prepared.normalized.source_indices)

    def spectrum(
        self,
        arrangement: ProjArrangement,
        source: str,
        infinity_index: Optional[int] = None,
        timings: bool = False,
        multinet_budget: Optional[int] = None,
    ) -> SpectrumReport:
        """Divisor table with certificates for every k > 1 dividing |cA|.

        Multinet certificates are searched only for k >= 3 with dim_k > 0.
        """
        clock: Dict[str, float] = {}
        start = time.perf_counter()
        spectrum = self.service.analyze(arrangement, infinity_index)
        clock["spectrum"] = time.perf_counter() - start
        prepared = spectrum.prepared

        start = time.perf_counter()
        rows = []
        for result in spectrum.orders:
            bound = upper_bound(arrangement, result.k)
            vanishing = vanishing_report(
                arrangement, k=result.k, service=self.service, prepared=prepared, result=result
            )
            multinet = None
            if result.k >= 3 and result.dimension:
                search = search_multinets(arrangement, result.k, budget=multinet_budget, limit=1)
                if search.multinets:
                    multinet = [list(c) for c in search.multinets[0].classes]
            rows.append(
                DivisorRow(
                    k=result.k,
                    resonant_bands=result.resonant_count,
                    dimension=result.dimension,
                    total_dimension=result.total_dimension(),
                    certified=result.certified,
                    per_root=result.per_root,
                    upper_bound=bound.kind.value,
                    sharp_pair=[bound.certificate.i, bound.certificate.j] if bound.certificate else None,
                    multinet=multinet,
                    criteria=list(vanishing.criteria),
                )
            )
        clock["certificates"] = time.perf_counter() - start

        return SpectrumReport(
            input=source,
            name=spectrum.name,
            lines=len(arrangement),
            n=spectrum.n,
            infinity_index=spectrum.infinity_index,
            chambers=spectrum.chamber_count,
            bounded_chambers=spectrum.bounded_count,
            bands=spectrum.band_count,
            divisors=rows,
            b1=spectrum.b1,
            pure_tone=spectrum.pure_tone,
            timings={key: round(value, 3) for key, value in clock.items()} if timings else None,
        )

    def chambers(self, arrangement: ProjArrangement, infinity_index: Optional[int] = None) -> ChambersReport:
        prepared = self.service.prepare(arrangement, infinity_index)
        items = [ChamberItem(label=c.label, bounded=c.bounded) for c in prepared.chambers]
        return ChambersReport(
            name=arrangement.name,
            infinity_index=prepared.normalized.infinity_index,
            lines=self._source_lines(prepared),
            chambers=items,
            count=len(items),
            bounded=sum(item.bounded for item in items),
        )

    @staticmethod
    def _band_item(prepared: PreparedArrangement, band: Band, k: int) -> BandItem:
        sources = prepared.normalized.source_indices
        wave = None
        if band.is_resonant(k):
            chambers = standing_wave(band, k).coefficients
            wave = {
                c.label: str(chambers[c.signs]) for c in band.bounded_interior if chambers[c.signs]
            }
        return BandItem(
            label=band.label,
            lower=sources[band.lower],
            upper=sources[band.upper],
            length=band.length,
            infinity_multiplicity=band.infinity_multiplicity,
            resonant=band.is_resonant(k),
            wave=wave,
        )

    def bands(self, arrangement: ProjArrangement, k: int, infinity_index: Optional[int] = None) -> BandsReport:
        check_order(k, len(arrangement))
        prepared = self.service.prepare(arrangement, infinity_index)
        nabla = nabla_kernel(prepared.normalized, prepared.chambers, k, prepared.bands)
        return BandsReport(
            name=arrangement.name,
            infinity_index=prepared.normalized.infinity_index,
            k=k,
            bands=[self._band_item(prepared, b, k) for b in prepared.bands],
            resonant_count=len(nabla.bands),
            dimension=nabla.dimension,
            relations=[[str(x) for x in vector] for vector in nabla.relations],
        )

    def oracle(
        self,
        arrangement: ProjArrangement,
        weights: Sequence[int],
        order: int,
        infinity_index: Optional[int] = None,
    ) -> OracleReport:
        """(h0, h1, h2) for q_i = zeta_order^(2 e_i), weights in file order."""
        prepared = self.service.prepare(arrangement, infinity_index)
        system = align_to_normalized(LocalSystem(order, tuple(weights)), prepared.normalized)
        h0, h1, h2 = local_system_cohomology(prepared.normalized, system, prepared.chambers)
        return OracleReport(
            name=arrangement.name,
            infinity_index=prepared.normalized.infinity_index,
            order=order,
            weights=list(weights),
            h0=h0,
            h1=h1,
            h2=h2,
        )

    def bounds(
        self,
        arrangement: ProjArrangement,
        k: int,
        infinity_index: Optional[int] = None,
        multinet_budget: Optional[int] = None,
    ) -> BoundsReport:
        bound = upper_bound(arrangement, k)
        pairs = sharp_pairs(arrangement)
        vanishing = vanishing_report(arrangement, infinity_index, k, service=self.service)
        if k >= 3:
            search = search_multinets(arrangement, k, budget=multinet_budget)
            multinets = [[list(c) for c in m.classes] for m in search.multinets]
            exhaustive, nodes = search.exhaustive, search.nodes
        else:
            multinets, exhaustive, nodes = [], True, 0
        return BoundsReport(
            name=arrangement.name,
            k=k,
            infinity_index=vanishing.infinity_index,
            dimension=vanishing.dimension,
            upper_bound=bound.kind.value,
            sharp_pair=[bound.certificate.i, bound.certificate.j] if bound.certificate else None,
            sharp_pairs=len(pairs),
            multinets=multinets,
            multinet_search_exhaustive=exhaustive,
            multinet_nodes=nodes,
            criteria=list(vanishing.criteria),
            vanishing_lines=list(vanishing.vanishing_lines),
            table=[
                LineRow(line=r.line, resonant_points=r.resonant_points, multiple_points=r.multiple_points)
                for r in vanishing.table
            ],
            violations=list(vanishing.violations),
        )

    @staticmethod
    def catalogue(entries: Sequence[CatalogueEntry]) -> CatalogueListing:
        return CatalogueListing(
            entries=[
                CatalogueItem(
                    name=e.name,
                    lines=len(e.arrangement),
                    field_order=e.arrangement.field_order,
                    default_infinity=e.default_infinity,
                    profile=e.arrangement.profile(),
                    description=e.description,
                    provenance=e.expected.provenance if e.expected else None,
                )
                for e in entries
            ]
        )

    @staticmethod
    def conjecture(rows: Sequence[ConjectureRow]) -> ConjectureReport:
        return ConjectureReport(
            rows=[
                ConjectureItem(
                    name=r.name,
                    simplicial=r.simplicial,
                    a6m1=r.a6m1,
                    nontrivial=r.nontrivial,
                    pure_tone=r.pure_tone,
                    multinet_orders=list(r.multinet_orders),
                    three_multinet=r.three_multinet,
                    exhaustive=r.exhaustive,
                    consistent=r.consistent,
                )
                for r in rows
            ]
        )
