/** DOM layer: builds the controls, binds them to the controller, and prints
 * the panel/comparison view-models. No indicator math happens here. */

import type { ServiceClient } from "./api.js";
import { WhatIfController, type ViewState } from "./controller.js";
import { buildBenefitPanel, buildComparison, buildErrorCard, type Card } from "./panel.js";
import type { WhatIfParams } from "./state.js";

interface SliderSpec {
  key: keyof WhatIfParams;
  label: string;
  min: number;
  max: number;
  step: number;
  display: (value: number) => string;
}

const SLIDERS: SliderSpec[] = [
  {
    key: "electricityPriceFactor",
    label: "Electricity price",
    min: 0.5,
    max: 2.0,
    step: 0.05,
    display: (v) => `× ${v.toFixed(2)}`,
  },
  {
    key: "gasPriceFactor",
    label: "Gas price",
    min: 0.5,
    max: 2.0,
    step: 0.05,
    display: (v) => `× ${v.toFixed(2)}`,
  },
  {
    key: "discountRate",
    label: "Discount rate",
    min: 0.0,
    max: 0.15,
    step: 0.005,
    display: (v) => `${(v * 100).toFixed(1)} %`,
  },
  {
    key: "horizonYears",
    label: "Horizon",
    min: 1,
    max: 30,
    step: 1,
    display: (v) => `${v} a`,
  },
  {
    key: "investmentEur",
    label: "Investment",
    min: 0,
    max: 1500,
    step: 5,
    display: (v) => `${v.toFixed(2)} €`,
  },
];

export interface App {
  controller: WhatIfController;
  dispose(): void;
}

export function mountApp(root: HTMLElement, client: ServiceClient, debounceMs = 150): App {
  root.innerHTML = `
    <header class="app-header">
      <h1>Smart-home benefits explorer</h1>
      <p>Pick a city and an automation kit, drag the sliders, and watch every
      homeowner benefit recompute from the service.</p>
    </header>
    <section class="controls" data-role="controls">
      <label>City
        <select data-param="city">
          <option value="stuttgart">Stuttgart (flat tariffs)</option>
          <option value="algiers">Algiers (block tariffs)</option>
        </select>
      </label>
      <label>Scenario
        <select data-param="scenario">
          <option value="low-cost">low-cost</option>
          <option value="extended">extended</option>
        </select>
      </label>
      <label>Data source
        <select data-param="source">
          <option value="reference">published reference savings</option>
          <option value="simulation">live simulation</option>
        </select>
      </label>
    </section>
    <section class="sliders" data-role="sliders"></section>
    <div class="status" data-role="status" hidden></div>
    <div class="error" data-role="error" hidden></div>
    <section class="benefits" data-role="benefits"></section>
    <section class="comparison" data-role="comparison"></section>
  `;

  const controller = new WhatIfController(client, (view) => render(root, view), {
    debounceMs,
  });

  const sliderHost = root.querySelector<HTMLElement>("[data-role='sliders']")!;
  for (const spec of SLIDERS) {
    const wrapper = document.createElement("label");
    wrapper.className = "slider";
    wrapper.innerHTML = `
      <span class="slider-label">${spec.label}</span>
      <input type="range" data-param="${spec.key}" min="${spec.min}"
             max="${spec.max}" step="${spec.step}" />
      <output data-output="${spec.key}"></output>
    `;
    sliderHost.appendChild(wrapper);
  }

  root.querySelectorAll<HTMLSelectElement>("select[data-param]").forEach((select) => {
    select.addEventListener("change", () => {
      controller.setParam(
        select.dataset.param as keyof WhatIfParams,
        select.value as never,
      );
    });
  });
  root.querySelectorAll<HTMLInputElement>("input[data-param]").forEach((input) => {
    input.addEventListener("input", () => {
      controller.setParam(
        input.dataset.param as keyof WhatIfParams,
        Number(input.value) as never,
      );
    });
  });

  void controller.start();
  return { controller, dispose: () => controller.dispose() };
}

function render(root: HTMLElement, view: ViewState): void {
  const status = root.querySelector<HTMLElement>("[data-role='status']");
  if (status) {
    status.hidden = !view.busy;
    status.textContent = view.busy ? "recomputing…" : "";
  }

  if (view.params) {
    syncControls(root, view.params);
  }

  const errorHost = root.querySelector<HTMLElement>("[data-role='error']");
  if (errorHost) {
    if (view.error) {
      const card = buildErrorCard(view.error);
      errorHost.hidden = false;
      errorHost.innerHTML = "";
      errorHost.appendChild(renderCard(card, "error-card"));
    } else {
      errorHost.hidden = true;
      errorHost.innerHTML = "";
    }
  }

  const benefitsHost = root.querySelector<HTMLElement>("[data-role='benefits']");
  if (benefitsHost && view.report) {
    benefitsHost.innerHTML = "";
    for (const group of buildBenefitPanel(view.report)) {
      const section = document.createElement("div");
      section.className = "benefit-group";
      section.dataset.group = group.title.toLowerCase();
      const heading = document.createElement("h2");
      heading.textContent = group.title;
      section.appendChild(heading);
      const cardHost = document.createElement("div");
      cardHost.className = "cards";
      for (const card of group.cards) {
        cardHost.appendChild(renderCard(card, "card"));
      }
      section.appendChild(cardHost);
      benefitsHost.appendChild(section);
    }
  }

  const comparisonHost = root.querySelector<HTMLElement>("[data-role='comparison']");
  if (comparisonHost && view.comparison) {
    const bars = buildComparison(view.comparison);
    const maxAdi = Math.max(1, ...bars.map((b) => Math.abs(b.adiEur)));
    const maxCo2 = Math.max(1, ...bars.map((b) => Math.abs(b.co2AnnualKg)));
    comparisonHost.innerHTML = "<h2>City comparison (published reference rows)</h2>";
    for (const bar of bars) {
      const row = document.createElement("div");
      row.className = "compare-row";
      row.dataset.city = bar.city;
      row.innerHTML = `
        <span class="compare-city">${bar.city}</span>
        <span class="compare-bar adi" style="width:${barWidth(bar.adiEur, maxAdi)}%"
              title="additional disposable income"></span>
        <span class="compare-value" data-compare="adi">${bar.adiLabel}</span>
        <span class="compare-bar co2" style="width:${barWidth(bar.co2AnnualKg, maxCo2)}%"
              title="annual CO2 savings"></span>
        <span class="compare-value" data-compare="co2">${bar.co2Label}</span>
      `;
      comparisonHost.appendChild(row);
    }
  }
}

function barWidth(value: number, max: number): number {
  return Math.round(Math.max(0, value) / max * 40);
}

function renderCard(card: Card, className: string): HTMLElement {
  const el = document.createElement("div");
  el.className = className;
  const label = document.createElement("span");
  label.className = "card-label";
  label.textContent = card.label;
  const value = document.createElement("strong");
  value.className = "card-value";
  value.textContent = card.value;
  el.appendChild(label);
  el.appendChild(value);
  if (card.detail) {
    const detail = document.createElement("span");
    detail.className = "card-detail";
    detail.textContent = card.detail;
    el.appendChild(detail);
  }
  return el;
}

/** Reflect parameters back into controls without stealing focus. */
function syncControls(root: HTMLElement, params: WhatIfParams): void {
  root.querySelectorAll<HTMLSelectElement>("select[data-param]").forEach((select) => {
    const key = select.dataset.param as keyof WhatIfParams;
    const value = String(params[key]);
    if (select.value !== value && document.activeElement !== select) {
      select.value = value;
    }
  });
  root.querySelectorAll<HTMLInputElement>("input[data-param]").forEach((input) => {
    const key = input.dataset.param as keyof WhatIfParams;
    const value = String(params[key]);
    if (input.value !== value && document.activeElement !== input) {
      input.value = value;
    }
    const spec = SLIDERS.find((s) => s.key === key);
    const output = root.querySelector<HTMLElement>(`output[data-output='${key}']`);
    if (spec && output) {
      output.textContent = spec.display(Number(params[key]));
    }
  });
}
