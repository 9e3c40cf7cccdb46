import init, { corpusList, corpusDocument, renderSvg, reportJson, scanXi } from "./pkg/gkm_web.js";

const $ = (id) => document.getElementById(id);

function status(text, ok = true) {
  $("status").textContent = text;
  $("status").className = ok ? "ok" : "bad";
}

function attempt(action) {
  try {
    action();
  } catch (e) {
    status(String(e), false);
  }
}

function draw() {
  attempt(() => {
    $("drawing").innerHTML = renderSvg($("doc").value, $("xi").value);
    status("drawn");
  });
}

function report() {
  attempt(() => {
    const r = JSON.parse(reportJson($("doc").value, $("xi").value));
    const failed = r.assertions.filter((a) => !a.passed).map((a) => a.name);
    const hl = r.lefschetz ? (r.lefschetz.holds ? "holds" : "fails") : "not decided";
    status(`xi = (${r.xi.join(", ")}), Betti ${r.betti.join(" ")}, hard Lefschetz ${hl}` +
      (failed.length ? `; failed: ${failed.join(", ")}` : ""), r.ok);
    $("scan-out").innerHTML = "";
    $("out").textContent = JSON.stringify(r, null, 2);
  });
}

function scan() {
  attempt(() => {
    const rows = JSON.parse(scanXi($("doc").value, 24));
    const body = rows.map((r) => {
      const hl = r.hard_lefschetz === null ? "" : (r.hard_lefschetz ? "holds" : "fails");
      return `<tr data-xi="${r.xi.slice(1, -1)}"><td><a href="#">${r.xi}</a></td>` +
        `<td>${r.index_increasing ? "yes" : "no"}</td><td>${r.betti.join(" ")}</td><td>${hl}</td></tr>`;
    }).join("");
    $("scan-out").innerHTML =
      `<table><tr><th>&xi;</th><th>index-increasing</th><th>Betti</th><th>hard Lefschetz</th></tr>${body}</table>`;
    $("out").textContent = "";
    status(`${rows.length} generic covectors`);
    for (const tr of $("scan-out").querySelectorAll("tr[data-xi]")) {
      tr.querySelector("a").addEventListener("click", (ev) => {
        ev.preventDefault();
        $("xi").value = tr.dataset.xi.replace(/\s/g, "");
        draw();
      });
    }
  });
}

function load(name) {
  $("doc").value = corpusDocument(name);
  $("xi").value = "";
  draw();
}

await init();
for (const { name, summary } of JSON.parse(corpusList())) {
  const opt = document.createElement("option");
  opt.value = name;
  opt.textContent = name;
  opt.title = summary;
  $("instance").append(opt);
}
$("instance").addEventListener("change", (ev) => load(ev.target.value));
$("draw").addEventListener("click", draw);
$("report").addEventListener("click", report);
$("scan").addEventListener("click", scan);
load($("instance").value);
