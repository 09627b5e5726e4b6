/** Column layout for the attack graph, layered by strongly connected
 * components in condensation order.  This is rendering geometry only; all
 * semantic content (choices, classes, terminality) comes from the service.
 */

export interface Positioned {
  label: string;
  x: number;
  y: number;
}

export interface GraphLayout {
  nodes: Positioned[];
  components: string[][];
}

export const COLUMN_GAP = 140;
export const ROW_GAP = 90;

/** Tarjan over label-level adjacency; components come out in topological
 * order of the condensation (attack sources before their targets). */
export function condensationOrder(args: string[], attacks: [string, string][]): string[][] {
  const successors = new Map<string, string[]>();
  for (const a of args) successors.set(a, []);
  for (const [src, dst] of attacks) {
    if (successors.has(src) && successors.has(dst)) successors.get(src)!.push(dst);
  }
  const order = new Map<string, number>();
  const low = new Map<string, number>();
  const onStack = new Set<string>();
  const stack: string[] = [];
  const components: string[][] = [];
  let counter = 0;

  const visit = (root: string): void => {
    const work: Array<{ node: string; next: number }> = [{ node: root, next: 0 }];
    order.set(root, counter);
    low.set(root, counter);
    counter += 1;
    stack.push(root);
    onStack.add(root);
    while (work.length > 0) {
      const frame = work[work.length - 1];
      const succ = successors.get(frame.node)!;
      if (frame.next < succ.length) {
        const target = succ[frame.next];
        frame.next += 1;
        if (!order.has(target)) {
          order.set(target, counter);
          low.set(target, counter);
          counter += 1;
          stack.push(target);
          onStack.add(target);
          work.push({ node: target, next: 0 });
        } else if (onStack.has(target)) {
          low.set(frame.node, Math.min(low.get(frame.node)!, order.get(target)!));
        }
        continue;
      }
      work.pop();
      const parent = work[work.length - 1];
      if (parent) {
        low.set(parent.node, Math.min(low.get(parent.node)!, low.get(frame.node)!));
      }
      if (low.get(frame.node) === order.get(frame.node)) {
        const component: string[] = [];
        while (true) {
          const member = stack.pop()!;
          onStack.delete(member);
          component.push(member);
          if (member === frame.node) break;
        }
        component.sort();
        components.push(component);
      }
    }
  };

  for (const arg of args) {
    if (!order.has(arg)) visit(arg);
  }
  components.reverse();
  return components;
}

export function layoutGraph(args: string[], attacks: [string, string][]): GraphLayout {
  const components = condensationOrder(args, attacks);
  const tallest = Math.max(1, ...components.map((c) => c.length));
  const nodes: Positioned[] = [];
  components.forEach((component, column) => {
    const top = ((tallest - component.length) * ROW_GAP) / 2;
    component.forEach((label, row) => {
      nodes.push({
        label,
        x: 70 + column * COLUMN_GAP,
        y: 60 + top + row * ROW_GAP,
      });
    });
  });
  return { nodes, components };
}
