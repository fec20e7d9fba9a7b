import type { NodeDatum } from "./types.js";

export const NO_MATCH_TEXT = "no members found";

/** Case-insensitive substring match over member labels; an empty query
 * returns the full list. Results are ordered alphabetically by label. */
export function matchMembers(nodes: readonly NodeDatum[], query: string): NodeDatum[] {
  const needle = query.trim().toLowerCase();
  const sorted = [...nodes].sort((a, b) => a.label.localeCompare(b.label));
  if (!needle) {
    return sorted;
  }
  return sorted.filter((node) => node.label.toLowerCase().includes(needle));
}

export function renderLocatorResults(
  container: HTMLElement,
  matches: NodeDatum[],
  onChoose: (node: NodeDatum) => void,
): void {
  container.textContent = "";
  if (matches.length === 0) {
    const empty = document.createElement("li");
    empty.className = "locator__empty";
    empty.textContent = NO_MATCH_TEXT;
    container.append(empty);
    return;
  }
  for (const node of matches) {
    const item = document.createElement("li");
    item.className = "locator__result";
    const button = document.createElement("button");
    button.type = "button";
    button.className = "locator__choose";
    button.textContent = node.label;
    button.addEventListener("click", () => onChoose(node));
    item.append(button);
    container.append(item);
  }
}
