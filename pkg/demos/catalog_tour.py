"""Walk through the reducible-configuration catalog.

Lists the built-in entries, then replays the certification scenarios
for one of them to show what "reducible" means operationally: every
way the outside coloring can block the preferred vertex still leaves
a recoloring that frees a color.
"""

from fivecolor import builtin_catalog, get_entry, validate_entry

entries = builtin_catalog()
print(f"{len(entries)} entries")
for e in entries:
    kind = type(e.scheme).__name__
    print(f"  {e.family:3} {e.name:16} size={len(e.caps)} scheme={kind}")

print()
name = "wheel-adjacent"
entry = get_entry(name)
print(f"scenarios for {name} (degree caps {entry.caps}):")
report = validate_entry(entry)
for s in report.scenarios:
    print(f"  {s.label:12} {s.status:12} {s.detail}")

# The all-blocked scenario is unreachable here: the hub's neighbors are
# all inside the pattern, so no outside vertex can force a fifth color
# onto it.  For the fan and ring families the same scenario replays.
assert report.reachable == 4
