/** SVG rendering of the current reduct plus the control panels.
 *
 * Every piece of semantic content on screen is read directly from the
 * view-model's mirrored state; this module only decides geometry and
 * colours.
 */

import { layoutGraph } from "./layout.js";
import { CLASS_COLOURS, SEMANTICS_OPTIONS } from "./model.js";
import type { ExplorerViewModel } from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const NEUTRAL = "#8d99ae";
const ACCEPTED = "#1b4332";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string> = {}): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function choiceColour(vm: ExplorerViewModel, label: string): string {
  const state = vm.state;
  if (!state) return NEUTRAL;
  for (const choice of state.choices) {
    if (choice.set.includes(label)) return CLASS_COLOURS[choice.class];
  }
  return NEUTRAL;
}

export function renderGraph(vm: ExplorerViewModel, svg: SVGSVGElement): void {
  svg.replaceChildren();
  const framework = vm.framework;
  if (!framework) return;
  const visible = new Set(vm.state ? vm.state.remaining : framework.args);
  const accepted = new Set(vm.state ? vm.state.accumulated : []);
  const shownArgs = framework.args.filter((a) => visible.has(a) || accepted.has(a));
  const shownAttacks = framework.attacks.filter(
    ([a, b]) => visible.has(a) && visible.has(b),
  );
  const layout = layoutGraph(shownArgs, shownAttacks);
  const position = new Map(layout.nodes.map((n) => [n.label, n]));
  const hovered = new Set(vm.hovered ?? []);

  const defs = svgEl("defs");
  const marker = svgEl("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#444" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const mutual = new Set(
    shownAttacks
      .filter(([a, b]) => shownAttacks.some(([c, d]) => c === b && d === a))
      .map(([a, b]) => `${a}->${b}`),
  );
  for (const [src, dst] of shownAttacks) {
    const from = position.get(src)!;
    const to = position.get(dst)!;
    if (src === dst) {
      svg.appendChild(
        svgEl("circle", {
          cx: String(from.x),
          cy: String(from.y - 30),
          r: "12",
          fill: "none",
          stroke: "#444",
          "stroke-width": "1.4",
        }),
      );
      continue;
    }
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const len = Math.hypot(dx, dy) || 1;
    const sx = from.x + (dx / len) * 22;
    const sy = from.y + (dy / len) * 22;
    const ex = to.x - (dx / len) * 24;
    const ey = to.y - (dy / len) * 24;
    const bend = mutual.has(`${src}->${dst}`) ? 18 : 4;
    const mx = (sx + ex) / 2 - (dy / len) * bend;
    const my = (sy + ey) / 2 + (dx / len) * bend;
    svg.appendChild(
      svgEl("path", {
        d: `M ${sx} ${sy} Q ${mx} ${my} ${ex} ${ey}`,
        fill: "none",
        stroke: "#444",
        "stroke-width": "1.4",
        "marker-end": "url(#arrow)",
      }),
    );
  }

  for (const node of layout.nodes) {
    const isAccepted = accepted.has(node.label);
    const colour = isAccepted ? ACCEPTED : choiceColour(vm, node.label);
    const circle = svgEl("circle", {
      cx: String(node.x),
      cy: String(node.y),
      r: "20",
      fill: colour,
      stroke: hovered.has(node.label) ? "#111" : "#2b2d42",
      "stroke-width": hovered.has(node.label) ? "4" : "1.5",
    });
    svg.appendChild(circle);
    const text = svgEl("text", {
      x: String(node.x),
      y: String(node.y + 5),
      "text-anchor": "middle",
      fill: "#fff",
      "font-size": "14",
      "font-weight": "bold",
    });
    text.textContent = node.label;
    svg.appendChild(text);
  }

  const width = Math.max(360, ...layout.nodes.map((n) => n.x + 80));
  const height = Math.max(240, ...layout.nodes.map((n) => n.y + 80));
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
}

export function renderControls(vm: ExplorerViewModel, root: HTMLElement): void {
  root.replaceChildren();

  const notices = el("div", { class: "notices" });
  vm.notices.forEach((message, index) => {
    const notice = el("div", { class: "notice" }, message);
    const dismiss = el("button", {}, "dismiss");
    dismiss.addEventListener("click", () => vm.dismissNotice(index));
    notice.appendChild(dismiss);
    notices.appendChild(notice);
  });
  root.appendChild(notices);

  if (vm.state) {
    const status = el("div", { class: "status" });
    status.appendChild(
      el("span", {}, `accumulated: {${vm.state.accumulated.join(", ")}}`),
    );
    if (vm.state.terminal) {
      status.appendChild(el("span", { class: "terminal" }, " terminal state: extension complete"));
    }
    root.appendChild(status);

    const choices = el("div", { class: "choices" });
    choices.appendChild(el("h3", {}, "eligible initial sets"));
    if (vm.state.choices.length === 0) {
      choices.appendChild(el("p", {}, "none: the selection rule allows no further commitments"));
    }
    for (const choice of vm.state.choices) {
      const chip = el("button", { class: `chip ${choice.class}` }, `{${choice.set.join(", ")}}`);
      chip.style.background = CLASS_COLOURS[choice.class];
      chip.disabled = !vm.canStep;
      chip.addEventListener("mouseenter", () => vm.setHover(choice.set));
      chip.addEventListener("mouseleave", () => vm.setHover(null));
      chip.addEventListener("click", () => void vm.stepChoice(choice.set));
      choices.appendChild(chip);
    }
    root.appendChild(choices);

    const undo = el("button", { class: "undo" }, "undo");
    undo.disabled = !vm.canUndo;
    undo.addEventListener("click", () => void vm.undo());
    root.appendChild(undo);
  }

  if (vm.replay) {
    const replay = el("div", { class: "replay" });
    replay.appendChild(
      el("span", {}, `replay ${vm.replay.cursor}/${vm.replay.steps.length}`),
    );
    const next = el("button", {}, vm.replayDone ? "replay finished" : "next step");
    next.disabled = vm.replayDone || vm.pending;
    next.addEventListener("click", () => void vm.replayNext());
    replay.appendChild(next);
    root.appendChild(replay);
  }

  if (vm.extensionsPanel.length > 0) {
    const panel = el("div", { class: "extensions" });
    panel.appendChild(el("h3", {}, `extensions (${vm.semantics})`));
    for (const entry of vm.extensionsPanel) {
      const row = el("div", { class: "extension-row" });
      row.appendChild(el("span", {}, `{${entry.extension.join(", ")}}`));
      const replayButton = el("button", {}, "replay");
      replayButton.disabled = vm.pending;
      replayButton.addEventListener("click", () => void vm.startReplay(entry.sequence));
      row.appendChild(replayButton);
      panel.appendChild(row);
    }
    root.appendChild(panel);
  }
}

export function renderLoader(vm: ExplorerViewModel, root: HTMLElement): void {
  root.replaceChildren();
  const textarea = el("textarea", {
    rows: "6",
    placeholder: "paste a framework (TGF: labels, '#', attack lines; or APX / JSON)",
  }) as HTMLTextAreaElement;
  const format = el("select") as HTMLSelectElement;
  for (const fmt of ["tgf", "apx", "json"]) {
    const option = el("option", { value: fmt }, fmt.toUpperCase());
    format.appendChild(option);
  }
  const load = el("button", {}, "load framework");
  load.disabled = vm.pending;
  load.addEventListener("click", () => void vm.loadFramework(format.value, textarea.value));

  const file = el("input", { type: "file" }) as HTMLInputElement;
  file.addEventListener("change", async () => {
    const chosen = file.files?.[0];
    if (!chosen) return;
    textarea.value = await chosen.text();
    if (chosen.name.endsWith(".apx")) format.value = "apx";
    if (chosen.name.endsWith(".json")) format.value = "json";
  });

  const semantics = el("select") as HTMLSelectElement;
  for (const code of SEMANTICS_OPTIONS) {
    semantics.appendChild(el("option", { value: code }, code.toUpperCase()));
  }
  semantics.value = vm.semantics;
  const open = el("button", {}, "open session");
  open.disabled = vm.pending || !vm.framework;
  open.addEventListener("click", () => void vm.openSession(semantics.value));

  const enumerate = el("button", {}, "enumerate extensions");
  enumerate.disabled = vm.pending || !vm.framework;
  enumerate.addEventListener("click", async () => {
    vm.semantics = semantics.value;
    await vm.loadExtensions();
  });

  root.append(textarea, format, file, load, semantics, open, enumerate);
}
