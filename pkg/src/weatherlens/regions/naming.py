"""Human-readable region names resolved from anchor stations."""

from __future__ import annotations

import logging

log = logging.getLogger(__name__)


def assign_region_names(
    assignment: dict[str, int], anchors: dict[str, str] | None
) -> dict[int, str]:
    """Map cluster labels to display names via anchor station membership.

    ``anchors`` maps display name -> station_id. A label without an anchor
    falls back to "Region <label>"; two anchors landing in one cluster keep
    the alphabetically first name and log a warning.
    """
    labels = sorted(set(assignment.values()))
    names = {label: f"Region {label}" for label in labels}
    if not anchors:
        return names
    claimed: dict[int, str] = {}
    for display_name in sorted(anchors):
        station_id = anchors[display_name]
        label = assignment.get(station_id)
        if label is None:
            log.warning("anchor station %r for %r not in assignment", station_id, display_name)
            continue
        if label in claimed:
            log.warning(
                "anchors %r and %r share cluster %d; keeping %r",
                claimed[label], display_name, label, claimed[label],
            )
            continue
        claimed[label] = display_name
        names[label] = display_name
    return names
