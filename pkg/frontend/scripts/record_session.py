"""Record the scripted workbench session against the real service.

Regenerates ../tests/recorded.ts. Run from the repository root with the
Python package installed:  python3 frontend/scripts/record_session.py
"""
import json
import re

from fastapi.testclient import TestClient

from ewqbaf.service import create_app
from ewqbaf.data import movie_fixture_bytes
from ewqbaf import qbaf_from_parts, serialize_qbaf

demo = qbaf_from_parts(
    arguments=[
        ("TomHanks", 0.050), ("MerylStreep", 0.070), ("Freedom", 0.080),
        ("Romance", 0.060), ("Writing", 0.90),
        ("Acting", 0.45), ("Themes", 0.40), ("Movie", 0.50),
    ],
    edges=[
        ("TomHanks", "Acting", "support", 0.8),
        ("MerylStreep", "Acting", "support", 0.9),
        ("Freedom", "Themes", "support", 0.6),
        ("Romance", "Themes", "attack", 0.3),
        ("Acting", "Movie", "support", 0.95),
        ("Themes", "Movie", "support", 0.7),
        ("Writing", "Movie", "attack", 0.6),
    ],
)
demo_doc = serialize_qbaf(demo).decode()

client = TestClient(create_app())
records = {}

r = client.post("/qbafs", content=movie_fixture_bytes())
fid = r.json()["id"]
records["FIXTURE_DOC"] = movie_fixture_bytes().decode()
records["FIXTURE_STRENGTHS"] = client.get(f"/qbafs/{fid}/strengths?semantics=mlp").text
records["FIXTURE_GRAES"] = client.get(f"/qbafs/{fid}/graes?topic=Movie&semantics=mlp").text

r = client.post("/qbafs", content=demo_doc.encode())
hid = r.json()["id"]
records["DEMO_DOC"] = demo_doc
records["SESSION_CREATE"] = r.text.replace(hid, "demo1")

def rec(name, resp):
    records[name] = resp.text

rec("SESSION_DOC_0", client.get(f"/qbafs/{hid}"))
rec("SESSION_STRENGTHS_0", client.get(f"/qbafs/{hid}/strengths?semantics=mlp"))
rec("SESSION_INTERVAL_0", client.get(f"/qbafs/{hid}/attainability?topic=Movie&semantics=mlp"))
rec("SESSION_GRAES_0", client.get(f"/qbafs/{hid}/graes?topic=Movie&semantics=mlp"))

# contest to exactly the current strength: immediate solve, no weight change;
# the request body carries the displayed literal verbatim, like the UI does
movie_literal = re.search(r'"Movie":([^,}]+)', records["SESSION_STRENGTHS_0"]).group(1)
records["SESSION_CURRENT_TARGET"] = movie_literal
r = client.post(
    f"/qbafs/{hid}/contest",
    content=('{"topic":"Movie","desired_strength":' + movie_literal +
             ',"semantics":"mlp","seed":0}').encode(),
    headers={"content-type": "application/json", "accept": "text/event-stream"},
)
records["SESSION_CONTEST_CURRENT_SSE"] = r.text


def run_contest(target, tag):
    r = client.post(
        f"/qbafs/{hid}/contest",
        json={"topic": "Movie", "desired_strength": target, "semantics": "mlp", "seed": 0},
        headers={"accept": "text/event-stream"},
    )
    records[f"SESSION_CONTEST_{tag}_SSE"] = r.text
    blocks = [b for b in r.text.strip().split("\n\n") if b]
    data_line = [l for l in blocks[-1].splitlines() if l.startswith("data: ")][0][6:]
    final = json.loads(data_line)
    assert final["status"] == "solved", final
    weights_raw = re.search(r'"weights":\[(.*)\]\}$', data_line).group(1)
    put_body = '{"weights":[' + weights_raw + "]}"
    resp = client.put(f"/qbafs/{hid}/weights", content=put_body,
                      headers={"content-type": "application/json"})
    assert resp.status_code == 200, resp.text
    records[f"SESSION_PUT_{tag}_BODY"] = put_body
    records[f"SESSION_DOC_{tag}"] = resp.text
    rec(f"SESSION_STRENGTHS_{tag}", client.get(f"/qbafs/{hid}/strengths?semantics=mlp"))
    rec(f"SESSION_INTERVAL_{tag}", client.get(f"/qbafs/{hid}/attainability?topic=Movie&semantics=mlp"))
    rec(f"SESSION_GRAES_{tag}", client.get(f"/qbafs/{hid}/graes?topic=Movie&semantics=mlp"))
    return json.loads(records[f"SESSION_STRENGTHS_{tag}"])["strengths"]["Movie"]


s1 = run_contest(0.3, "1")
assert abs(s1 - 0.3) <= 0.01, s1
s2 = run_contest(0.6, "2")
assert abs(s2 - 0.6) <= 0.01, s2
print("after accepts: Movie =", s1, "then", s2)

r = client.post(
    f"/qbafs/{hid}/contest",
    json={"topic": "Movie", "desired_strength": 0.95, "semantics": "mlp", "seed": 0},
    headers={"accept": "text/event-stream"},
)
assert r.status_code == 422
records["SESSION_CONTEST_UNATTAINABLE"] = r.text

lines = [
    "// Recorded service responses for the scripted workbench session.",
    "// Regenerate with scripts/record_session.py against the real service.",
    "",
]
for name, text in records.items():
    lines.append(f"export const {name}: string = {json.dumps(text)};")
    lines.append("")
with open("frontend/tests/recorded.ts", "w") as fh:
    fh.write("\n".join(lines))
print("wrote frontend/tests/recorded.ts with", len(records), "records")
